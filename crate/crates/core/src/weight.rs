//! The affine weight lattice of `sl_e^`, in coordinates over the fundamental
//! weights `Lambda_0 .. Lambda_{e-1}` plus the null root `delta`.
//!
//! Simple roots expand as `alpha_i = sum_j a_{ji} Lambda_j + [i = 0] delta`
//! where `a` is the affine Cartan matrix of type `A^(1)_{e-1}`. Coroots pair
//! with `Lambda_j` by the Kronecker delta and annihilate `delta`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::multipartition::{Multicharge, Multipartition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    #[serde(rename = "lambda")]
    pub lambda_coeffs: Vec<i64>,
    #[serde(rename = "delta")]
    pub delta_coeff: i64,
}

impl AffineWeight {
    pub fn zero(e: usize) -> Self {
        AffineWeight {
            lambda_coeffs: vec![0; e],
            delta_coeff: 0,
        }
    }

    pub fn new(lambda_coeffs: Vec<i64>, delta_coeff: i64) -> Self {
        AffineWeight {
            lambda_coeffs,
            delta_coeff,
        }
    }

    pub fn rank(&self) -> usize {
        self.lambda_coeffs.len()
    }

    /// Pairing with the central element.
    pub fn level(&self) -> i64 {
        self.lambda_coeffs.iter().sum()
    }

    /// The same weight with its `delta` coordinate dropped.
    pub fn truncate_delta(&self) -> Self {
        AffineWeight {
            lambda_coeffs: self.lambda_coeffs.clone(),
            delta_coeff: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("weights always serialize")
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.lambda_coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            write_term(f, c, &format!("L{i}"), wrote)?;
            wrote = true;
        }
        if self.delta_coeff != 0 {
            write_term(f, self.delta_coeff, "d", wrote)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: i64, name: &str, leading_sign: bool) -> fmt::Result {
    let sign = if c < 0 {
        "-"
    } else if leading_sign {
        "+"
    } else {
        ""
    };
    match c.abs() {
        1 => write!(f, "{sign}{name}"),
        a => write!(f, "{sign}{a}{name}"),
    }
}

impl Add for &AffineWeight {
    type Output = AffineWeight;

    fn add(self, rhs: &AffineWeight) -> AffineWeight {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &AffineWeight {
    type Output = AffineWeight;

    fn sub(self, rhs: &AffineWeight) -> AffineWeight {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&AffineWeight> for AffineWeight {
    fn add_assign(&mut self, rhs: &AffineWeight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.lambda_coeffs.iter_mut().zip(&rhs.lambda_coeffs) {
            *a += b;
        }
        self.delta_coeff += rhs.delta_coeff;
    }
}

impl SubAssign<&AffineWeight> for AffineWeight {
    fn sub_assign(&mut self, rhs: &AffineWeight) {
        assert_eq!(self.rank(), rhs.rank(), "weights of different rank");
        for (a, b) in self.lambda_coeffs.iter_mut().zip(&rhs.lambda_coeffs) {
            *a -= b;
        }
        self.delta_coeff -= rhs.delta_coeff;
    }
}

impl Neg for &AffineWeight {
    type Output = AffineWeight;

    fn neg(self) -> AffineWeight {
        AffineWeight::zero(self.rank()) - self.clone()
    }
}

impl Sub for AffineWeight {
    type Output = AffineWeight;

    fn sub(self, rhs: AffineWeight) -> AffineWeight {
        &self - &rhs
    }
}

impl Add for AffineWeight {
    type Output = AffineWeight;

    fn add(self, rhs: AffineWeight) -> AffineWeight {
        &self + &rhs
    }
}

impl Mul<&AffineWeight> for i64 {
    type Output = AffineWeight;

    fn mul(self, rhs: &AffineWeight) -> AffineWeight {
        AffineWeight {
            lambda_coeffs: rhs.lambda_coeffs.iter().map(|c| self * c).collect(),
            delta_coeff: self * rhs.delta_coeff,
        }
    }
}

/// Entry `a_{ij} = <alpha_i^vee, alpha_j>` of the affine Cartan matrix of type `A^(1)_{e-1}`.
pub fn cartan_entry(i: usize, j: usize, e: usize) -> i64 {
    assert!(i < e && j < e, "residue out of range");
    if i == j {
        2
    } else if e == 2 {
        -2
    } else if (i + 1) % e == j || (j + 1) % e == i {
        -1
    } else {
        0
    }
}

/// The affine Cartan matrix, row `i` holding `<alpha_i^vee, alpha_j>`.
pub fn cartan_matrix(e: usize) -> Vec<Vec<i64>> {
    (0..e)
        .map(|i| (0..e).map(|j| cartan_entry(i, j, e)).collect())
        .collect()
}

/// Fundamental weight `Lambda_i`.
pub fn fundamental(i: usize, e: usize) -> AffineWeight {
    assert!(i < e, "residue out of range");
    let mut w = AffineWeight::zero(e);
    w.lambda_coeffs[i] = 1;
    w
}

/// `Lambda_n` for an arbitrary integer `n`, read through `n mod e`.
pub fn fundamental_of_integer(n: i64, e: usize) -> AffineWeight {
    fundamental(n.rem_euclid(e as i64) as usize, e)
}

pub fn simple_root(i: usize, e: usize) -> AffineWeight {
    AffineWeight {
        lambda_coeffs: (0..e).map(|j| cartan_entry(j, i, e)).collect(),
        delta_coeff: i64::from(i == 0),
    }
}

/// The null root `delta`.
pub fn null_root(e: usize) -> AffineWeight {
    AffineWeight {
        lambda_coeffs: vec![0; e],
        delta_coeff: 1,
    }
}

/// `<alpha_i^vee, w>`.
pub fn pair_coroot(i: usize, w: &AffineWeight) -> i64 {
    w.lambda_coeffs[i]
}

/// `Lambda_s = Lambda_{s_1} + .. + Lambda_{s_l}`.
pub fn lambda_s(c: &Multicharge) -> AffineWeight {
    let mut w = AffineWeight::zero(c.e());
    for &s in c.charge() {
        w.lambda_coeffs[c.reduce(s)] += 1;
    }
    w
}

/// The weight `Lambda_s - sum_i n_i alpha_i`, with `n_i` the number of boxes of residue `i`.
pub fn wt(mp: &Multipartition, c: &Multicharge) -> AffineWeight {
    weight_from_counts(&mp.residue_counts(c), c)
}

pub fn weight_from_counts(counts: &[usize], c: &Multicharge) -> AffineWeight {
    let e = c.e();
    let mut w = lambda_s(c);
    for (i, &n) in counts.iter().enumerate() {
        if n > 0 {
            w -= &(n as i64 * &simple_root(i, e));
        }
    }
    w
}

pub fn level(w: &AffineWeight) -> i64 {
    w.level()
}
