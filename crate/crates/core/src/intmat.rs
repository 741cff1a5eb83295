//! Exact integer determinants.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in exact matrix arithmetic")]
pub struct Overflow;

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate value is an exact minor, so the division is exact.
/// The empty matrix has determinant 1.
pub fn determinant(rows: &[Vec<i64>]) -> Result<i64, Overflow> {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant of a non-square matrix");
            r.iter().map(|&v| v as i128).collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Overflow)?;
                a[i][j] = t / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    let det = if n == 0 { 1 } else { sign * a[n - 1][n - 1] };
    i64::try_from(det).map_err(|_| Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cofactor_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0i128;
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                .collect();
            let term = m[0][c] as i128 * cofactor_det(&minor);
            total += if c % 2 == 0 { term } else { -term };
        }
        total
    }

    #[test]
    fn small_cases() {
        assert_eq!(determinant(&[]), Ok(1));
        assert_eq!(determinant(&[vec![5]]), Ok(5));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), Ok(-1));
        assert_eq!(determinant(&[vec![1, -1], vec![4, -3]]), Ok(1));
        assert_eq!(determinant(&[vec![0, 0], vec![0, 3]]), Ok(0));
    }

    #[test]
    fn overflow_reported() {
        let big = i64::MAX / 2;
        assert_eq!(determinant(&[vec![big, -big], vec![big, big]]), Err(Overflow));
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(n in 0usize..6, seed in proptest::collection::vec(-9i64..=9, 36)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| seed[i * 6..i * 6 + n].to_vec()).collect();
            prop_assert_eq!(determinant(&m).unwrap() as i128, cofactor_det(&m));
        }
    }
}
