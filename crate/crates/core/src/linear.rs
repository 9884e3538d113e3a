//! Exact linear solving by fraction-free (Bareiss) elimination.

use crate::poly::Rat;
use num::integer::Integer as NumInteger;
use num::{BigInt, One, Signed, Zero};

/// Solves `M x = b` exactly. Returns `None` when the system is inconsistent;
/// for underdetermined systems the free variables are set to 0.
pub fn solve(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.len();
    assert_eq!(rows, b.len(), "matrix/rhs size mismatch");
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    if rows == 0 {
        return Some(Vec::new());
    }

    // Clear denominators row by row; the augmented column sits at index `cols`.
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for (row, rhs) in m.iter().zip(b) {
        assert_eq!(row.len(), cols, "ragged matrix");
        let mut lcm = BigInt::one();
        for v in row.iter().chain(std::iter::once(rhs)) {
            lcm = lcm.lcm(v.denom());
        }
        let mut int_row: Vec<BigInt> = Vec::with_capacity(cols + 1);
        for v in row.iter().chain(std::iter::once(rhs)) {
            int_row.push(v.numer() * (&lcm / v.denom()));
        }
        a.push(int_row);
    }

    let mut prev = BigInt::one();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for j in col + 1..=cols {
                let val = &a[r][j] * &a[rank][col] - &a[r][col] * &a[rank][j];
                let (q, rem) = val.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                a[r][j] = q;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // Rows below the rank have all-zero coefficients; a nonzero rhs there
    // means the system is inconsistent.
    for r in rank..rows {
        if !a[r][cols].is_zero() {
            return None;
        }
    }

    let mut x = vec![Rat::zero(); cols];
    for &(r, col) in pivots.iter().rev() {
        let mut acc = Rat::from_integer(a[r][cols].clone());
        for j in col + 1..cols {
            if !a[r][j].is_zero() {
                acc -= Rat::from_integer(a[r][j].clone()) * &x[j];
            }
        }
        x[col] = acc / Rat::from_integer(a[r][col].clone());
    }

    debug_assert!(verify(m, b, &x));
    Some(x)
}

fn verify(m: &[Vec<Rat>], b: &[Rat], x: &[Rat]) -> bool {
    m.iter().zip(b).all(|(row, rhs)| {
        let mut acc = Rat::zero();
        for (c, xi) in row.iter().zip(x) {
            acc += c * xi;
        }
        acc == *rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        rat_int(n)
    }

    #[test]
    fn identity_returns_rhs() {
        let m = vec![vec![r(1), r(0)], vec![r(0), r(1)]];
        let b = vec![r(7), r(-3)];
        assert_eq!(solve(&m, &b), Some(b.clone()));
    }

    #[test]
    fn inconsistent_system() {
        let m = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        let b = vec![r(1), r(3)];
        assert_eq!(solve(&m, &b), None);
    }

    #[test]
    fn diagonal_back_substitution() {
        let m = vec![vec![r(2), r(0)], vec![r(0), r(3)]];
        let b = vec![r(1), r(1)];
        assert_eq!(solve(&m, &b), Some(vec![rat(1, 2), rat(1, 3)]));
    }

    #[test]
    fn underdetermined_picks_a_solution() {
        let m = vec![vec![r(1), r(1)]];
        let b = vec![r(5)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(&x[0] + &x[1], r(5));
    }

    /// Plain rational Gaussian elimination, used as an independent oracle.
    fn solve_oracle(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
        let rows = m.len();
        let cols = m.first().map(|r| r.len()).unwrap_or(0);
        let mut a: Vec<Vec<Rat>> = m
            .iter()
            .zip(b)
            .map(|(row, rhs)| {
                row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()
            })
            .collect();
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = Rat::one() / a[rank][col].clone();
            for j in col..=cols {
                a[rank][j] = &a[rank][j] * &inv;
            }
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..=cols {
                        a[r][j] = &a[r][j] - &(&f * &a[rank][j]);
                    }
                }
            }
            pivots.push((rank, col));
            rank += 1;
            if rank == rows {
                break;
            }
        }
        for r in rank..rows {
            if !a[r][cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); cols];
        for &(r, col) in &pivots {
            x[col] = a[r][cols].clone();
        }
        Some(x)
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            entries in proptest::collection::vec(-5i64..6, 12),
            rhs in proptest::collection::vec(-5i64..6, 3),
        ) {
            let m: Vec<Vec<Rat>> = entries
                .chunks(4)
                .map(|row| row.iter().map(|&v| r(v)).collect())
                .collect();
            let b: Vec<Rat> = rhs.iter().map(|&v| r(v)).collect();
            let mine = solve(&m, &b);
            let oracle = solve_oracle(&m, &b);
            prop_assert_eq!(mine.is_some(), oracle.is_some());
            if let Some(x) = mine {
                prop_assert!(verify(&m, &b, &x));
            }
        }
    }
}
