//! Exact rational matrices and subspaces of `Q^n`.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination over big
//! integers after clearing denominators row by row. There is no floating
//! point anywhere in this module.
//!
//! Matrix entries are addressed 1-based, `(row, column)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{input, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Matrix from integer rows. All rows must have the same length.
    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(input("rows have different lengths"));
        }
        Ok(RationalMatrix::from_fn(rows.len(), cols, |i, j| {
            BigRational::from_integer(BigInt::from(rows[i - 1][j - 1]))
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square()
            && (1..=self.rows).all(|i| (1..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        self.is_square()
            && (1..=self.rows).all(|i| (1..=i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        Ok(RationalMatrix::from_fn(self.rows, other.cols, |i, j| {
            (1..=self.cols).fold(BigRational::zero(), |acc, t| {
                let a = self.get(i, t);
                if a.is_zero() {
                    acc
                } else {
                    acc + a * other.get(t, j)
                }
            })
        }))
    }

    /// Rows `r0..=r1`, columns `c0..=c1`. An empty range gives an empty matrix.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> RationalMatrix {
        let rows = (r1 + 1).saturating_sub(r0);
        let cols = (c1 + 1).saturating_sub(c0);
        RationalMatrix::from_fn(rows, cols, |i, j| self.get(r0 + i - 1, c0 + j - 1).clone())
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows {
            return Err(Error::SizeMismatch {
                left: self.rows,
                right: other.rows,
            });
        }
        Ok(RationalMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j <= self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (1..=self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<BigInt>> = (1..=self.rows).map(|i| self.integer_row(i)).collect();
        bareiss_rank(&mut m, self.cols)
    }

    /// Row `i` scaled by the lcm of its denominators.
    fn integer_row(&self, i: usize) -> Vec<BigInt> {
        let row = &self.data[(i - 1) * self.cols..i * self.cols];
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        row.iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect()
    }

    /// Inverse of an invertible upper-triangular matrix, by back substitution.
    pub fn inverse_upper_triangular(&self) -> Result<RationalMatrix> {
        if !self.is_upper_triangular() {
            return Err(input("matrix is not square upper-triangular"));
        }
        let n = self.rows;
        if (1..=n).any(|i| self.get(i, i).is_zero()) {
            return Err(input("upper-triangular matrix has a zero on the diagonal"));
        }
        let mut inv = RationalMatrix::zeros(n, n);
        for j in 1..=n {
            // solve self * x = e_j from the bottom up
            for i in (1..=j).rev() {
                let mut acc = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                for t in i + 1..=j {
                    acc -= self.get(i, t) * inv.get(t, j);
                }
                inv.set(i, j, acc / self.get(i, i));
            }
        }
        Ok(inv)
    }

    /// Text form: one row per line, entries `p/q` separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|j| format_rational(self.get(i, j))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form. Entries may be `p/q` or a bare integer `p`;
    /// blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<RationalMatrix> {
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split(' ')
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    parse_rational(tok).map_err(|e| {
                        Error::Parse(format!("line {}: {e}", lineno + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("rows have different lengths".into()));
        }
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(RationalMatrix {
            rows: n,
            cols,
            data,
        })
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix {}x{}\n{}", self.rows, self.cols, self.to_text())
    }
}

/// `p/q` in lowest terms with positive denominator; integers keep `/1`.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("`{tok}` is not a rational number"));
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("`{tok}` has a zero denominator")));
    }
    Ok(BigRational::new(p, q))
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}

fn bareiss_rank(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            for c in col + 1..cols {
                let num = &pivot_row[col] * &row[c] - &row[col] * &pivot_row[c];
                let (q, r) = num.div_rem(&prev_pivot);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[c] = q;
            }
            row[col] = BigInt::zero();
        }
        prev_pivot = pivot_row[col].clone();
        rank += 1;
    }
    rank
}

/// A linear subspace of `Q^n`, stored as a matrix whose columns form a basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: RationalMatrix,
}

impl Subspace {
    /// Fails unless the columns are linearly independent.
    pub fn new(basis: RationalMatrix) -> Result<Self> {
        if basis.rank() != basis.cols() {
            return Err(input(format!(
                "the {} spanning columns are linearly dependent",
                basis.cols()
            )));
        }
        Ok(Subspace { basis })
    }

    /// Subspace spanned by the given column vectors (each of length `ambient`).
    pub fn spanned_by(ambient: usize, vectors: &[Vec<BigRational>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(input("generator has the wrong length"));
        }
        Subspace::new(RationalMatrix::from_fn(ambient, vectors.len(), |i, j| {
            vectors[j - 1][i - 1].clone()
        }))
    }

    /// `<e_i : i in indices>`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let vectors: Vec<Vec<BigRational>> = indices
            .iter()
            .map(|&i| unit_vector(ambient, i))
            .collect();
        Subspace::spanned_by(ambient, &vectors)
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient() == other.ambient()
            && self
                .basis
                .hconcat(&other.basis)
                .map(|m| m.rank() == self.dim())
                .unwrap_or(false)
    }

    /// Equality as subspaces, by mutual containment.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains(other)
    }

    /// `dim(V ∩ <e_1, …, e_j>)` for `j = 0..=n`.
    pub fn flag_profile(&self) -> Vec<usize> {
        let n = self.ambient();
        (0..=n)
            .map(|j| {
                if j == n {
                    self.dim()
                } else {
                    self.dim() - self.basis.submatrix(j + 1, n, 1, self.dim()).rank()
                }
            })
            .collect()
    }

    /// Generators written as sums of basis vectors, e.g. `<e2, e1+e7>`.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = (1..=self.dim())
            .map(|j| describe_vector(&self.basis.column(j)))
            .collect();
        format!("<{}>", gens.join(", "))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace{}", self.describe())
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<BigRational> {
    (1..=n)
        .map(|t| if t == i { BigRational::one() } else { BigRational::zero() })
        .collect()
}

/// `e1+e7`, `2e1-1/2e3`, `0`.
pub fn describe_vector(v: &[BigRational]) -> String {
    let mut out = String::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
        let abs = c.abs();
        let coeff = if abs.is_one() {
            String::new()
        } else if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        out.push_str(&format!("{sign}{coeff}e{}", idx + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_integers(rows).unwrap()
    }

    /// Rank by plain rational Gauss-Jordan, independent of the Bareiss path.
    fn rank_gauss(a: &RationalMatrix) -> usize {
        let mut rows: Vec<Vec<BigRational>> =
            (1..=a.rows()).map(|i| (1..=a.cols()).map(|j| a.get(i, j).clone()).collect()).collect();
        let mut rank = 0;
        for col in 0..a.cols() {
            if let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                rows.swap(rank, p);
                let pivot = rows[rank][col].clone();
                let prow = rows[rank].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && !row[col].is_zero() {
                        let f = &row[col] / &pivot;
                        for (x, y) in row.iter_mut().zip(&prow) {
                            *x -= &f * y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn ranks() {
        assert_eq!(m(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).rank(), 2);
        let half = RationalMatrix::from_fn(2, 2, |i, j| rational(i as i64, j as i64 + 1));
        assert_eq!(half.rank(), 1);
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn products_and_inverse() {
        let e12 = m(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let e23 = m(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let e13 = m(&[vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(e12.mul(&e23).unwrap(), e13);
        let b = m(&[vec![2, -1, 3], vec![0, -3, 1], vec![0, 0, 1]]);
        let inv = b.inverse_upper_triangular().unwrap();
        assert_eq!(b.mul(&inv).unwrap(), RationalMatrix::identity(3));
        assert!(m(&[vec![1, 0], vec![1, 1]]).inverse_upper_triangular().is_err());
        assert!(m(&[vec![0, 1], vec![0, 1]]).inverse_upper_triangular().is_err());
    }

    #[test]
    fn text_format() {
        let a = RationalMatrix::from_fn(2, 3, |i, j| rational(i as i64 - j as i64, 2));
        let text = a.to_text();
        assert_eq!(text, "0/1 -1/2 -1/1\n1/2 0/1 -1/2\n");
        assert_eq!(RationalMatrix::parse_text(&text).unwrap(), a);
        assert_eq!(
            RationalMatrix::parse_text("1 2/4\n\n-3 0\n").unwrap(),
            RationalMatrix::from_fn(2, 2, |i, j| match (i, j) {
                (1, 1) => integer(1),
                (1, 2) => rational(1, 2),
                (2, 1) => integer(-3),
                _ => integer(0),
            })
        );
        assert!(RationalMatrix::parse_text("1 2\n3\n").is_err());
        assert!(RationalMatrix::parse_text("1/0\n").is_err());
        assert!(RationalMatrix::parse_text("x\n").is_err());
    }

    #[test]
    fn subspaces() {
        let u = Subspace::spanned_by(
            4,
            &[vec![integer(1), integer(0), integer(1), integer(0)], unit_vector(4, 2)],
        )
        .unwrap();
        assert_eq!(u.describe(), "<e1+e3, e2>");
        assert_eq!(u.flag_profile(), vec![0, 0, 1, 2, 2]);
        let v = Subspace::coordinate(4, &[2, 3]).unwrap();
        assert!(!u.same_as(&v));
        let w = Subspace::spanned_by(
            4,
            &[unit_vector(4, 2), vec![integer(2), integer(1), integer(2), integer(0)]],
        )
        .unwrap();
        assert!(u.same_as(&w));
        assert!(Subspace::spanned_by(2, &[unit_vector(2, 1), unit_vector(2, 1)]).is_err());
        assert_eq!(describe_vector(&[rational(-1, 2), integer(0), integer(3)]), "-1/2e1+3e3");
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_gauss(
            rows in 1usize..6,
            cols in 1usize..6,
            entries in prop::collection::vec((-4i64..=4, 1i64..=3), 36),
        ) {
            let a = RationalMatrix::from_fn(rows, cols, |i, j| {
                let (p, q) = entries[(i - 1) * 6 + (j - 1)];
                rational(p, q)
            });
            prop_assert_eq!(a.rank(), rank_gauss(&a));
        }

        #[test]
        fn text_round_trip(entries in prop::collection::vec((-50i64..=50, 1i64..=9), 12)) {
            let a = RationalMatrix::from_fn(3, 4, |i, j| {
                let (p, q) = entries[(i - 1) * 4 + (j - 1)];
                rational(p, q)
            });
            prop_assert_eq!(RationalMatrix::parse_text(&a.to_text()).unwrap(), a);
        }
    }
}
