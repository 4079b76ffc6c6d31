//! Coefficient fields ℚ and 𝔽_p and small dense linear algebra over them.
//!
//! Field elements are carried as [`Rational`]s; over 𝔽_p they are always
//! integers in `0..p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::smith::column_echelon;
use super::{Int, IntMatrix, RatMatrix, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Field {
    pub fn prime(p: u64) -> Option<Field> {
        is_prime(p).then_some(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Canonical representative; `None` if the denominator vanishes mod p.
    pub fn try_reduce(&self, x: &Rational) -> Option<Rational> {
        match self {
            Field::Rationals => Some(x.clone()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let den = x.denom().mod_floor(&pb).to_u64()?;
                if den == 0 {
                    return None;
                }
                let num = x.numer().mod_floor(&pb).to_u64()?;
                let v = mul_mod(num, inv_mod(den, *p), *p);
                Some(Rational::from_integer(BigInt::from(v)))
            }
        }
    }

    pub fn reduce(&self, x: &Rational) -> Rational {
        self.try_reduce(x).expect("denominator divisible by the characteristic")
    }

    pub fn reduce_int(&self, x: &Int) -> Rational {
        match self {
            Field::Rationals => x.to_rational(),
            Field::Prime(p) => Rational::from_integer(BigInt::from(x.rem_u64(*p))),
        }
    }

    pub fn add(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(&(a + b))
    }

    pub fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(&(a - b))
    }

    pub fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        self.reduce(&(a * b))
    }

    pub fn neg(&self, a: &Rational) -> Rational {
        self.reduce(&-a)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Rational) -> Rational {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => a.recip(),
            Field::Prime(p) => {
                let v = a.numer().to_u64().expect("reduced element");
                Rational::from_integer(BigInt::from(inv_mod(v, *p)))
            }
        }
    }

    pub fn dot(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let s = a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y);
        self.reduce(&s)
    }

    pub fn reduce_matrix(&self, m: &RatMatrix) -> RatMatrix {
        m.map(|x| self.reduce(x))
    }

    /// Rank of a matrix with entries already in this field.
    pub fn rank(&self, m: &RatMatrix) -> usize {
        match self {
            Field::Prime(p) => {
                let rows: Vec<Vec<u64>> = (0..m.rows())
                    .map(|i| m.row(i).iter().map(|x| x.numer().to_u64().expect("reduced element")).collect())
                    .collect();
                rank_mod_p(rows, *p)
            }
            Field::Rationals => {
                // Clear denominators row by row; the ℤ-rank equals the ℚ-rank.
                let columns: Vec<Vec<Int>> = (0..m.cols())
                    .map(|j| {
                        (0..m.rows())
                            .map(|i| {
                                let lcm = m.row(i).iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                                let x = &m[(i, j)];
                                Int::from_big(x.numer() * (lcm / x.denom()))
                            })
                            .collect()
                    })
                    .collect();
                column_echelon(m.rows(), columns, false).rank()
            }
        }
    }

    /// Rank over this field of an integer matrix.
    pub fn rank_int(&self, m: &IntMatrix) -> usize {
        match self {
            Field::Prime(p) => {
                let rows = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.rem_u64(*p)).collect()).collect();
                rank_mod_p(rows, *p)
            }
            Field::Rationals => column_echelon(m.rows(), m.columns(), false).rank(),
        }
    }

    /// Gauss-Jordan elimination in place; returns the pivot column of each
    /// non-zero row (rows are reordered so the first `pivots.len()` are non-zero).
    pub fn row_reduce(&self, rows: &mut [Vec<Rational>]) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, pr);
            let inv = self.inv(&rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(x, &inv);
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let factor = rows[i][c].clone();
                    let (pivot_row, row) = if i < r {
                        let (a, b) = rows.split_at_mut(r);
                        (&b[0], &mut a[i])
                    } else {
                        let (a, b) = rows.split_at_mut(i);
                        (&a[r], &mut b[0])
                    };
                    for (x, y) in row.iter_mut().zip(pivot_row) {
                        if !y.is_zero() {
                            *x = self.sub(x, &self.mul(&factor, y));
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        pivots
    }

    /// Coefficients `c` with `Σ cⱼ · vectors[j] = target`, if the target is in the span.
    pub fn solve_in_span(&self, vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
        let k = vectors.len();
        let dim = target.len();
        // Augmented system, one row per coordinate: [v₁ … v_k | target].
        let mut rows: Vec<Vec<Rational>> = (0..dim)
            .map(|i| {
                let mut row: Vec<Rational> = vectors.iter().map(|v| v[i].clone()).collect();
                row.push(target[i].clone());
                row
            })
            .collect();
        let pivots = self.row_reduce(&mut rows);
        if pivots.last() == Some(&k) {
            return None;
        }
        let mut c = vec![Rational::zero(); k];
        for (r, &pc) in pivots.iter().enumerate() {
            c[pc] = rows[r][k].clone();
        }
        Some(c)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "f{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" {
            return Ok(Field::Rationals);
        }
        s.strip_prefix('f')
            .and_then(|p| p.parse::<u64>().ok())
            .and_then(Field::prime)
            .ok_or_else(|| format!("unknown field `{s}` (expected q or f<prime>)"))
    }
}

impl From<Field> for String {
    fn from(field: Field) -> String {
        field.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = extended_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in r + 1..rows.len() {
            let factor = rows[i][c];
            if factor == 0 {
                continue;
            }
            let (a, b) = rows.split_at_mut(i);
            for (x, y) in b[0].iter_mut().zip(&a[r]) {
                *x = (*x + p - mul_mod(factor, *y, p)) % p;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// A dense matrix tagged with its coefficient field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldMatrix {
    pub field: Field,
    pub entries: RatMatrix,
}

impl FieldMatrix {
    pub fn new(field: Field, entries: &RatMatrix) -> FieldMatrix {
        FieldMatrix { field, entries: field.reduce_matrix(entries) }
    }

    pub fn from_int(field: Field, m: &IntMatrix) -> FieldMatrix {
        FieldMatrix { field, entries: m.map(|x| field.reduce_int(x)) }
    }

    pub fn rank(&self) -> usize {
        self.field.rank(&self.entries)
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.field, other.field, "mixed fields");
        FieldMatrix::new(self.field, &self.entries.mul(&other.entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_matrix;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_examples() {
        let zero = int_matrix(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(Field::Rationals.rank_int(&zero), 0);
        let f2 = Field::Prime(2);
        assert_eq!(FieldMatrix::from_int(f2, &int_matrix(&[&[1, 1], &[1, 1]])).rank(), 1);
        let f3 = Field::Prime(3);
        assert_eq!(FieldMatrix::from_int(f3, &int_matrix(&[&[2, 0], &[0, 3]])).rank(), 1);
        assert_eq!(Field::Rationals.rank_int(&int_matrix(&[&[2, 0], &[0, 3]])), 2);
    }

    #[test]
    fn rational_rank_clears_denominators() {
        let m = RatMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]]);
        assert_eq!(Field::Rationals.rank(&m), 1);
    }

    #[test]
    fn reduction_mod_p() {
        let f5 = Field::Prime(5);
        assert_eq!(f5.reduce(&q(1, 2)), q(3, 1));
        assert_eq!(f5.reduce(&q(-1, 1)), q(4, 1));
        assert_eq!(f5.try_reduce(&q(1, 5)), None);
        assert_eq!(f5.mul(&q(3, 1), &f5.inv(&q(3, 1))), q(1, 1));
    }

    #[test]
    fn span_solving() {
        let f = Field::Rationals;
        let vs = vec![vec![q(1, 1), q(0, 1)], vec![q(1, 1), q(1, 1)]];
        let c = f.solve_in_span(&vs, &[q(3, 1), q(2, 1)]).unwrap();
        assert_eq!(c, vec![q(1, 1), q(2, 1)]);
        assert!(f.solve_in_span(&vs[..1], &[q(0, 1), q(1, 1)]).is_none());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("f5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("f4".parse::<Field>().is_err());
        assert_eq!(Field::Prime(3).to_string(), "f3");
    }
}
