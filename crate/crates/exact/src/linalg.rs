//! Dense matrices over the rationals.

use crate::poly::Poly;
use crate::Rat;

pub type Matrix = Vec<Vec<Rat>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rat::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

pub fn from_ints(rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| Rat::from(x)).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &Matrix, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Reduced row-echelon form and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (r, _, p) = eliminate(m, false);
    (r, p)
}

/// Reduced row-echelon form `R`, an invertible `T` with `T * m = R`, and
/// the pivot columns.
pub fn rref_with_transform(m: &Matrix) -> (Matrix, Matrix, Vec<usize>) {
    eliminate(m, true)
}

fn eliminate(m: &Matrix, track: bool) -> (Matrix, Matrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let mut t = if track { identity(rows) } else { Vec::new() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        if track {
            t.swap(r, p);
        }
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        if track {
            for x in t[r].iter_mut() {
                *x *= &inv;
            }
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let (pivot_row, other) = split_pair(&mut a, r, i);
            for (x, y) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            if track {
                let (pivot_row, other) = split_pair(&mut t, r, i);
                for (x, y) in other.iter_mut().zip(pivot_row.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, t, pivots)
}

/// Borrows row `a` immutably and row `b` mutably.
fn split_pair(m: &mut Matrix, a: usize, b: usize) -> (&Vec<Rat>, &mut Vec<Rat>) {
    if a < b {
        let (lo, hi) = m.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// A basis of `{x : m x = 0}`.
pub fn null_space(m: &Matrix) -> Vec<Vec<Rat>> {
    let cols = m.first().map_or(0, Vec::len);
    let (r, pivots) = rref(m);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); cols];
            v[free] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&r[i][free];
            }
            v
        })
        .collect()
}

pub fn determinant(m: &Matrix) -> Rat {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (pivot_row, other) = split_pair(&mut a, c, i);
            for (x, y) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Characteristic polynomial `det(x I - m)` via reduction to Hessenberg form.
pub fn charpoly(m: &Matrix) -> Poly {
    let n = m.len();
    let mut h = m.clone();
    for k in 1..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&i| !h[i][k - 1].is_zero()) else {
            continue;
        };
        if p != k {
            h.swap(p, k);
            for row in h.iter_mut() {
                row.swap(p, k);
            }
        }
        let inv = h[k][k - 1].recip();
        for i in k + 1..n {
            if h[i][k - 1].is_zero() {
                continue;
            }
            let u = &h[i][k - 1] * &inv;
            let (pivot_row, other) = split_pair(&mut h, k, i);
            for (x, y) in other.iter_mut().zip(pivot_row.iter()) {
                *x -= &u * y;
            }
            for row in h.iter_mut() {
                let add = &u * &row[i];
                row[k] += add;
            }
        }
    }
    let mut polys = vec![Poly::one()];
    for k in 1..=n {
        let mut p = &(&Poly::x() - &Poly::constant(h[k - 1][k - 1].clone())) * &polys[k - 1];
        let mut t = Rat::one();
        for i in (1..k).rev() {
            t *= &h[i][i - 1];
            if t.is_zero() {
                break;
            }
            let c = &h[i - 1][k - 1] * &t;
            p = &p - &polys[i - 1].scale(&c);
        }
        polys.push(p);
    }
    polys.pop().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn rref_small_cases() {
        let (r, p) = rref(&identity(3));
        assert_eq!(r, identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = rref(&from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn charpoly_matches_determinants() {
        let m = vec![
            vec![rat(1, 2), rat(3, 1), rat(0, 1), rat(-1, 3)],
            vec![rat(2, 1), rat(0, 1), rat(5, 7), rat(1, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(4, 1)],
            vec![rat(1, 1), rat(-2, 1), rat(3, 5), rat(0, 1)],
        ];
        let cp = charpoly(&m);
        assert_eq!(cp.degree(), Some(4));
        for x in -3..=3 {
            let x = Rat::from(x);
            let shifted: Matrix = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let d = if i == j { x.clone() } else { Rat::zero() };
                            d - &m[i][j]
                        })
                        .collect()
                })
                .collect();
            assert_eq!(cp.eval(&x), determinant(&shifted));
        }
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = null_space(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(mul_vec(&m, &v).iter().all(Rat::is_zero));
        }
    }
}
