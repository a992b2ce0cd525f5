//! Exact arithmetic in the cyclotomic field `Q(zeta_e) = Q[x] / Phi_e(x)`.

use std::fmt;

use num::{BigRational, One, Zero};

use crate::linalg::{format_rational, kernel, Field, Matrix, Rationals};

/// The `n`-th cyclotomic polynomial, coefficients from degree 0 upwards.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n > 0, "cyclotomic polynomial of order zero");
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact division");
    quot
}

/// Element of `Q(zeta_e)`: coefficients of `1, zeta, .., zeta^(phi(e)-1)`.
/// Printed as a polynomial in `q = zeta_e`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber(Vec<BigRational>);

impl CyclotomicNumber {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = format_rational(c);
            terms.push(match k {
                0 => coeff,
                _ => {
                    let var = if k == 1 {
                        "q".to_string()
                    } else {
                        format!("q^{k}")
                    };
                    match coeff.as_str() {
                        "1" => var,
                        "-1" => format!("-{var}"),
                        _ => format!("{coeff}*{var}"),
                    }
                }
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// The field `Q(zeta_e)` with `zeta_e = exp(2 pi i / e)` kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    e: usize,
    modulus: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(e: usize) -> Self {
        CyclotomicField {
            e,
            modulus: cyclotomic_polynomial(e),
        }
    }

    pub fn order(&self) -> usize {
        self.e
    }

    /// Degree of the field over `Q`, i.e. Euler's `phi(e)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn from_rational(&self, r: BigRational) -> CyclotomicNumber {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = r;
        CyclotomicNumber(v)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CyclotomicNumber {
        let k = k.rem_euclid(self.e as i64) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        self.reduce(poly)
    }

    pub fn zeta(&self) -> CyclotomicNumber {
        self.zeta_pow(1)
    }

    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> CyclotomicNumber {
        self.reduce(coeffs)
    }

    fn reduce(&self, mut poly: Vec<BigRational>) -> CyclotomicNumber {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = poly.len() - d;
            for (i, &m) in self.modulus[..d].iter().enumerate() {
                if m != 0 {
                    poly[shift + i] -= &top * BigRational::from_integer(m.into());
                }
            }
        }
        poly.resize(d, BigRational::zero());
        CyclotomicNumber(poly)
    }

    /// Matrix of multiplication by `a` on the power basis.
    fn multiplication_matrix(&self, a: &CyclotomicNumber) -> Matrix<BigRational> {
        let d = self.degree();
        let mut m = Matrix::zeros(&Rationals, d, d);
        for j in 0..d {
            let mut basis = vec![BigRational::zero(); d];
            basis[j] = BigRational::one();
            let col = self.mul(a, &CyclotomicNumber(basis));
            for (i, c) in col.0.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }
}

impl Field for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber(vec![BigRational::zero(); self.degree()])
    }

    fn one(&self) -> CyclotomicNumber {
        self.from_rational(BigRational::one())
    }

    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.0.iter().all(Zero::is_zero)
    }

    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        let d = self.degree();
        if d == 1 {
            return CyclotomicNumber(vec![&a.0[0] * &b.0[0]]);
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber(a.0.iter().map(|x| -x).collect())
    }

    fn inv(&self, a: &CyclotomicNumber) -> Option<CyclotomicNumber> {
        if self.is_zero(a) {
            return None;
        }
        let d = self.degree();
        if d == 1 {
            return Some(CyclotomicNumber(vec![a.0[0].recip()]));
        }
        // Solve a * x = 1 as a kernel problem on [M | -1].
        let m = self.multiplication_matrix(a);
        let mut aug = Matrix::zeros(&Rationals, d, d + 1);
        for r in 0..d {
            for c in 0..d {
                aug.set(r, c, m.get(r, c).clone());
            }
        }
        aug.set(0, d, -BigRational::one());
        let ker = kernel(&Rationals, &aug);
        let sol = ker.into_iter().find(|v| !v[d].is_zero())?;
        let scale = sol[d].recip();
        Some(CyclotomicNumber(
            sol[..d].iter().map(|x| x * &scale).collect(),
        ))
    }

    fn from_i64(&self, n: i64) -> CyclotomicNumber {
        self.from_rational(BigRational::from_integer(n.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_is_primitive_root() {
        for e in 2..=8 {
            let k = CyclotomicField::new(e);
            assert_eq!(k.zeta_pow(e as i64), k.one());
            for j in 1..e as i64 {
                assert_ne!(k.zeta_pow(j), k.one(), "e={e}, j={j}");
            }
            assert_eq!(k.mul(&k.zeta(), &k.zeta_pow(-1)), k.one());
        }
        let k2 = CyclotomicField::new(2);
        assert_eq!(k2.zeta(), k2.from_i64(-1));
    }

    #[test]
    fn inverses() {
        let k = CyclotomicField::new(5);
        let a = k.add(&k.zeta(), &k.from_i64(2));
        let inv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), k.one());
        assert!(k.inv(&k.zero()).is_none());
    }

    #[test]
    fn sum_of_roots_vanishes() {
        let k = CyclotomicField::new(3);
        let s = (0..3).fold(k.zero(), |acc, j| k.add(&acc, &k.zeta_pow(j)));
        assert!(k.is_zero(&s));
        assert_eq!(k.zeta().to_string(), "q");
        assert_eq!(k.zeta_pow(2).to_string(), "-1 - q");
    }
}
