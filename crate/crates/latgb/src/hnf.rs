//! Integer-matrix routines: row Hermite normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn row_multiply_add(m: &mut [Vec<BigInt>], dst: usize, src: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for j in 0..m[dst].len() {
        let add = &m[src][j] * factor;
        m[dst][j] += add;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], r: usize) {
    for e in &mut m[r] {
        *e = -&*e;
    }
}

/// Reduces `a` in place to row Hermite normal form and returns the unimodular
/// transform `u` with `u * a_input = a_output`.
pub fn hermite_normal_form(a: &mut [Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut u = identity(rows);

    let mut r = 0;
    let mut c = 0;
    while r < rows && c < cols {
        // Smallest nonzero entry (in absolute value) works as the pivot.
        let pivot = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
        let Some(pivot) = pivot else {
            c += 1;
            continue;
        };

        a.swap(r, pivot);
        u.swap(r, pivot);

        for k in r + 1..rows {
            if a[k][c].is_zero() {
                continue;
            }
            let q = -(&a[k][c] / &a[r][c]);
            row_multiply_add(a, k, r, &q);
            row_multiply_add(&mut u, k, r, &q);
        }

        // Remainders survive truncated division; repeat on this column.
        if a.iter().skip(r + 1).any(|row| !row[c].is_zero()) {
            continue;
        }

        if a[r][c].is_negative() {
            negate_row(a, r);
            negate_row(&mut u, r);
        }

        // Entries above a pivot reduce into [0, pivot).
        for k in 0..r {
            let q = -a[k][c].div_floor(&a[r][c]);
            row_multiply_add(a, k, r, &q);
            row_multiply_add(&mut u, k, r, &q);
        }

        r += 1;
        c += 1;
    }

    u
}

/// Basis (as rows, possibly empty) of `{ x in Z^k : x * a = 0 }`.
pub fn integer_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut h = a.to_vec();
    let u = hermite_normal_form(&mut h);
    h.iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(Zero::is_zero))
        .map(|(_, urow)| urow)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(data: &[&[i64]]) -> Vec<Vec<BigInt>> {
        data.iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let cols = b[0].len();
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn kernel_column_vector() {
        let kern = integer_kernel(&m(&[&[1], &[2]]));
        assert_eq!(kern.len(), 1);
        let k = &kern[0];
        let expect = m(&[&[2, -1]]).remove(0);
        assert!(*k == expect || k.iter().map(|x| -x).collect::<Vec<_>>() == expect);
    }

    #[test]
    fn kernel_identity_is_empty() {
        assert!(integer_kernel(&m(&[&[1, 0], &[0, 1]])).is_empty());
    }

    #[test]
    fn kernel_zero_matrix_is_full() {
        let kern = integer_kernel(&m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert_eq!(kern, identity(3));
    }

    #[test]
    fn transform_reproduces_hnf() {
        let orig = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let mut h = orig.clone();
        let u = hermite_normal_form(&mut h);
        assert_eq!(mat_mul(&u, &orig), h);
        // Echelon with nonnegative entries above positive pivots.
        let mut last = None;
        for row in &h {
            let lead = row.iter().position(|x| !x.is_zero());
            if let Some(l) = lead {
                assert!(row[l].is_positive());
                if let Some(prev) = last {
                    assert!(l > prev);
                }
                last = Some(l);
            }
        }
    }

    #[test]
    fn kernel_rows_annihilate() {
        let a = m(&[&[3, 1], &[6, 2], &[9, 3], &[1, 1]]);
        let kern = integer_kernel(&a);
        assert_eq!(kern.len(), 2);
        for x in &kern {
            for j in 0..2 {
                let s: BigInt = x.iter().zip(&a).map(|(xi, row)| xi * &row[j]).sum();
                assert!(s.is_zero());
            }
        }
    }
}
