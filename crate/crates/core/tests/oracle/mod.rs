//! Independent reference formulas used to cross-check the library. Nothing
//! here calls into the crate's combinatorics.
#![allow(dead_code)]

use fock_crystal::multipartition::Multipartition;

pub type Parts = Vec<Vec<u32>>;

pub fn parts_of(mp: &Multipartition) -> Parts {
    mp.components().iter().map(|p| p.parts().to_vec()).collect()
}

pub fn residue(e: usize, s: &[i64], component: usize, row: usize, col: usize) -> usize {
    (col as i64 - row as i64 + s[component]).rem_euclid(e as i64) as usize
}

fn row_len(parts: &[u32], row: usize) -> u32 {
    parts.get(row - 1).copied().unwrap_or(0)
}

/// Cells `(component, row, col)`, 1-based, that can be added.
pub fn addable(parts: &Parts) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (j, p) in parts.iter().enumerate() {
        for row in 1..=p.len() + 1 {
            let len = row_len(p, row);
            if row == 1 || row_len(p, row - 1) > len {
                out.push((j, row, len as usize + 1));
            }
        }
    }
    out
}

/// Cells that can be removed.
pub fn removable(parts: &Parts) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (j, p) in parts.iter().enumerate() {
        for row in 1..=p.len() {
            let len = row_len(p, row);
            if row_len(p, row + 1) < len {
                out.push((j, row, len as usize));
            }
        }
    }
    out
}

pub fn with_cell(parts: &Parts, (j, row, _): (usize, usize, usize), delta: i32) -> Parts {
    let mut out = parts.clone();
    if row > out[j].len() {
        out[j].push(0);
    }
    out[j][row - 1] = (out[j][row - 1] as i32 + delta) as u32;
    while out[j].last() == Some(&0) {
        out[j].pop();
    }
    out
}

pub fn residue_counts(parts: &Parts, e: usize, s: &[i64]) -> Vec<usize> {
    let mut counts = vec![0; e];
    for (j, p) in parts.iter().enumerate() {
        for (r, &len) in p.iter().enumerate() {
            for col in 1..=len as usize {
                counts[residue(e, s, j, r + 1, col)] += 1;
            }
        }
    }
    counts
}

pub fn cartan(i: usize, j: usize, e: usize) -> i64 {
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

/// `<h_i, Lambda_s - sum n_j alpha_j>` from the residue counts.
pub fn pairing(parts: &Parts, e: usize, s: &[i64], i: usize) -> i64 {
    let level_part = s
        .iter()
        .filter(|&&sp| sp.rem_euclid(e as i64) as usize == i)
        .count() as i64;
    let counts = residue_counts(parts, e, s);
    level_part
        - (0..e)
            .map(|j| counts[j] as i64 * cartan(i, j, e))
            .sum::<i64>()
}

/// Number of `l`-multipartitions of `n`, from the generating function
/// `prod_k (1 - x^k)^(-l)`.
pub fn multipartition_count(n: usize, l: usize) -> u64 {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for _ in 0..l {
        for k in 1..=n {
            for m in k..=n {
                coeffs[m] += coeffs[m - k];
            }
        }
    }
    coeffs[n]
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
