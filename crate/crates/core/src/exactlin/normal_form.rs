use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Int, IntMatrix};

/// Row Hermite normal form `h = u * original`.
///
/// Convention: `h` is in row echelon form with zero rows last, every pivot is
/// positive, and every entry above a pivot lies in `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_form(m: &IntMatrix) -> HermiteForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut found = false;
        while let Some(p) = (r..rows)
            .filter(|&i| !h.get(i, c).is_zero())
            .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()))
        {
            found = true;
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.get(i, c).div_floor(h.get(r, c));
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm { h, u, pivots }
}

/// `u * original * v = d` with `d` diagonal, `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    pub original: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Nonzero diagonal entries.
    pub fn elementary_divisors(&self) -> Vec<Int> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }

    /// Checks every stated invariant exactly.
    pub fn is_valid(&self) -> bool {
        let diag_ok = (0..self.d.rows())
            .all(|i| (0..self.d.cols()).all(|j| i == j || self.d.get(i, j).is_zero()));
        let diag = self.diagonal();
        let chain_ok = diag.iter().all(|x| !x.is_negative())
            && diag.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    w[1].is_multiple_of(&w[0])
                }
            });
        diag_ok
            && chain_ok
            && self.u.is_unimodular()
            && self.v.is_unimodular()
            && self.u.mul(&self.original).mul(&self.v) == self.d
    }
}

/// Smith normal form by deterministic gcd-driven pivoting.
pub fn smith_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((p, q)) = best else {
                return finish(u, v, d, m);
            };
            d.swap_rows(t, p);
            u.swap_rows(t, p);
            d.swap_cols(t, q);
            v.swap_cols(t, q);

            let mut clean = true;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let f = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &f);
                u.add_row_multiple(i, t, &f);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let f = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &f);
                v.add_col_multiple(j, t, &f);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole remaining block
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(d.get(t, t))));
            match offender {
                Some(i) => {
                    let one = Int::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, v, d, m)
}

fn finish(u: IntMatrix, v: IntMatrix, d: IntMatrix, m: &IntMatrix) -> SmithDecomposition {
    SmithDecomposition { u, v, d, original: m.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    /// Row lattice of a 2x2 matrix contains row vector `r` iff `r = x * M`
    /// has an integral solution.
    fn row_lattice_contains(m: &[[i64; 2]; 2], r: [i64; 2]) -> bool {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        // x = r * adj(M) / det
        let x0 = r[0] * m[1][1] - r[1] * m[1][0];
        let x1 = -r[0] * m[0][1] + r[1] * m[0][0];
        det != 0 && x0 % det == 0 && x1 % det == 0
    }

    /// Exhaustive oracle: the unique upper-triangular matrix with positive
    /// pivots and reduced off-diagonal entry that generates the same row
    /// lattice, found by scanning every candidate up to |det|.
    fn brute_force_hnf_2x2(m: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
        let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
        let mut found = Vec::new();
        for a in 1..=det {
            for c in 1..=det {
                if a * c != det {
                    continue;
                }
                for b in 0..c {
                    let cand = [[a, b], [0, c]];
                    let same = row_lattice_contains(&m, cand[0])
                        && row_lattice_contains(&m, cand[1])
                        && row_lattice_contains(&cand, m[0])
                        && row_lattice_contains(&cand, m[1]);
                    if same {
                        found.push(cand);
                    }
                }
            }
        }
        assert_eq!(found.len(), 1, "Hermite form must be unique");
        found[0]
    }

    #[test]
    fn hermite_identity() {
        let hf = hermite_form(&IntMatrix::identity(3));
        assert_eq!(hf.h, IntMatrix::identity(3));
        assert_eq!(hf.u, IntMatrix::identity(3));
    }

    #[test]
    fn hermite_two_by_two_matches_exhaustive_oracle() {
        let golden = brute_force_hnf_2x2([[2, 4], [0, 3]]);
        assert_eq!(golden, [[2, 1], [0, 3]]);
        let hf = hermite_form(&im(&[&[2, 4], &[0, 3]]));
        assert_eq!(hf.h, im(&[&[2, 1], &[0, 3]]));
        assert_eq!(hf.u.mul(&im(&[&[2, 4], &[0, 3]])), hf.h);
        assert!(hf.u.is_unimodular());

        for m in [[[3, 5], [1, 2]], [[4, 6], [2, 9]], [[-2, 3], [5, 7]], [[0, 4], [6, 1]]] {
            let hf = hermite_form(&im(&[&m[0], &m[1]]));
            let golden = brute_force_hnf_2x2(m);
            assert_eq!(hf.h, im(&[&golden[0], &golden[1]]), "{m:?}");
        }
    }

    #[test]
    fn hermite_permutation() {
        let m = im(&[&[0, 1], &[1, 0]]);
        let hf = hermite_form(&m);
        assert_eq!(hf.h, IntMatrix::identity(2));
        assert_eq!(hf.u, m);
    }

    #[test]
    fn hermite_rank_deficient_and_empty() {
        let m = im(&[&[2, 4], &[1, 2], &[3, 6]]);
        let hf = hermite_form(&m);
        assert_eq!(hf.rank(), 1);
        assert_eq!(hf.h, im(&[&[1, 2], &[0, 0], &[0, 0]]));
        assert_eq!(hf.u.mul(&m), hf.h);

        let empty = IntMatrix::zeros(3, 0);
        let hf = hermite_form(&empty);
        assert_eq!(hf.u, IntMatrix::identity(3));
        assert_eq!(hf.rank(), 0);
    }

    #[test]
    fn smith_identity() {
        let s = smith_form(&IntMatrix::identity(4));
        assert_eq!(s.d, IntMatrix::identity(4));
        assert!(s.is_valid());
    }

    /// 2x2 oracle: d1 = gcd of entries, d1 * d2 = |det|.
    fn smith_oracle_2x2(m: &IntMatrix) -> Vec<Int> {
        let g = m.gcd();
        let det = m.det().abs();
        vec![g.clone(), det / g]
    }

    #[test]
    fn smith_skew_examples() {
        for (m, want) in [(im(&[&[0, 2], &[-2, 0]]), ints(&[2, 2])), (im(&[&[0, -6], &[6, 0]]), ints(&[6, 6]))] {
            let s = smith_form(&m);
            assert!(s.is_valid());
            assert_eq!(s.diagonal(), smith_oracle_2x2(&m));
            assert_eq!(s.diagonal(), want);
        }
    }

    #[test]
    fn smith_needs_divisibility_fix() {
        // diag(2, 3) is diagonal but not in Smith form
        let s = smith_form(&im(&[&[2, 0], &[0, 3]]));
        assert!(s.is_valid());
        assert_eq!(s.diagonal(), ints(&[1, 6]));
    }

    #[test]
    fn smith_rectangular_and_zero() {
        let s = smith_form(&im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert!(s.is_valid());
        assert_eq!(s.diagonal(), ints(&[2, 6, 12]));

        let s = smith_form(&im(&[&[0, 0, 0], &[0, 0, 0]]));
        assert!(s.is_valid());
        assert_eq!(s.rank(), 0);

        let s = smith_form(&im(&[&[1, 2, 3], &[4, 5, 6]]));
        assert!(s.is_valid());
        assert_eq!(s.diagonal(), ints(&[1, 3]));
    }
}
