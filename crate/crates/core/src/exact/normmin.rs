//! Exact minimisation of `|f|` over a simplex for an affine `f`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactRadius, Rational};
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Norm {
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "l2")]
    L2,
    #[serde(rename = "linf")]
    Linf,
}

impl Norm {
    pub fn of(&self, v: &[Rational]) -> ExactRadius {
        match self {
            Norm::L1 => ExactRadius::rat(v.iter().map(|x| x.abs()).fold(Rational::zero(), |a, b| a + b)),
            Norm::L2 => ExactRadius::sqrt(v.iter().map(|x| x * x).fold(Rational::zero(), |a, b| a + b)),
            Norm::Linf => ExactRadius::rat(v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Norm::L1 => "l1",
            Norm::L2 => "l2",
            Norm::Linf => "linf",
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Norm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "l1" => Ok(Norm::L1),
            "l2" => Ok(Norm::L2),
            "linf" => Ok(Norm::Linf),
            other => Err(format!("unknown norm `{other}` (expected l1, l2 or linf)")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormMin {
    pub min: ExactRadius,
    /// Barycentric coordinates of a minimiser.
    pub argmin: Vec<Rational>,
    pub at_vertex: bool,
}

/// `Σ λᵢ vᵢ`.
pub fn interpolate(values: &[Vec<Rational>], lambda: &[Rational]) -> Vec<Rational> {
    let n = values.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); n];
    for (v, l) in values.iter().zip(lambda) {
        if l.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += l * x;
        }
    }
    out
}

fn unit(k: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); k];
    e[i] = Rational::one();
    e
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// A linear functional `ℓ` with dual norm ≤ 1 and `ℓ(vᵢ) ≥ |v*|` for all
/// vertices proves `|x| ≥ |v*|` on the whole simplex.
fn vertex_certificate(values: &[Vec<Rational>], norm: Norm, best: usize) -> bool {
    let star = &values[best];
    let n = star.len();
    match norm {
        Norm::L2 => {
            let sq = dot(star, star);
            values.iter().all(|v| dot(star, v) >= sq)
        }
        Norm::L1 => {
            let ell: Vec<Rational> = star.iter().map(|x| x.signum()).collect();
            let target = dot(&ell, star);
            values.iter().all(|v| dot(&ell, v) >= target)
        }
        Norm::Linf => {
            let target = star.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero);
            (0..n).any(|j| {
                [Rational::one(), -Rational::one()]
                    .iter()
                    .any(|s| values.iter().all(|v| s * &v[j] >= target))
            })
        }
    }
}

/// Solves a square rational system; `None` when singular.
pub(crate) fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = a[c][c].recip();
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] * &inv;
            for j in c..n {
                if !a[c][j].is_zero() {
                    let delta = &factor * &a[c][j];
                    a[i][j] -= delta;
                }
            }
            let delta = &factor * &b[c];
            b[i] -= delta;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Calls `visit` with every `size`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else { return };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimises `objective · x` over `{x : eq·x = eq_rhs, a·x ≥ b for (a, b) in ineqs}`
/// by enumerating basic feasible points. The feasible set must be a non-empty
/// pointed polytope.
fn lp_vertex_min(
    vars: usize,
    eq: (&[Rational], &Rational),
    ineqs: &[(Vec<Rational>, Rational)],
    objective: &[Rational],
) -> (Rational, Vec<Rational>) {
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for_each_subset(ineqs.len(), vars - 1, |chosen| {
        let mut a = Vec::with_capacity(vars);
        let mut b = Vec::with_capacity(vars);
        a.push(eq.0.to_vec());
        b.push(eq.1.clone());
        for &c in chosen {
            a.push(ineqs[c].0.clone());
            b.push(ineqs[c].1.clone());
        }
        let Some(x) = solve_square(a, b) else { return };
        if ineqs.iter().all(|(row, rhs)| dot(row, &x) >= *rhs) {
            let value = dot(objective, &x);
            if best.as_ref().is_none_or(|(v, _)| value < *v) {
                best = Some((value, x));
            }
        }
    });
    best.expect("bounded feasible polytope has a vertex")
}

fn lp_min(values: &[Vec<Rational>], norm: Norm) -> (ExactRadius, Vec<Rational>) {
    let k = values.len();
    let n = values[0].len();
    let zero = Rational::zero();
    let one = Rational::one();
    // Auxiliary variables bound |(Vλ)_j| from above: one shared t for ℓ∞, one per coordinate for ℓ₁.
    let aux = if norm == Norm::Linf { 1 } else { n };
    let vars = k + aux;
    let mut ineqs = Vec::new();
    for i in 0..k {
        ineqs.push((unit(vars, i), zero.clone()));
    }
    for j in 0..n {
        let t = if norm == Norm::Linf { k } else { k + j };
        for sign in [1i64, -1] {
            let mut row = vec![zero.clone(); vars];
            for (i, v) in values.iter().enumerate() {
                row[i] = -Rational::from_integer(sign.into()) * &v[j];
            }
            row[t] = one.clone();
            ineqs.push((row, zero.clone()));
        }
    }
    let mut eq = vec![zero.clone(); vars];
    for x in eq.iter_mut().take(k) {
        *x = one.clone();
    }
    let mut objective = vec![zero.clone(); vars];
    for x in objective.iter_mut().skip(k) {
        *x = one.clone();
    }
    let (value, x) = lp_vertex_min(vars, (&eq, &one), &ineqs, &objective);
    (ExactRadius::rat(value), x[..k].to_vec())
}

fn l2_min(values: &[Vec<Rational>]) -> (ExactRadius, Vec<Rational>) {
    let k = values.len();
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for size in 2..=k {
        for_each_subset(k, size, |face| {
            // KKT for min |Σ μᵢ vᵢ|² subject to Σ μᵢ = 1 on the face's affine hull.
            let mut a = vec![vec![Rational::zero(); size + 1]; size + 1];
            let mut b = vec![Rational::zero(); size + 1];
            for (r, &i) in face.iter().enumerate() {
                for (c, &j) in face.iter().enumerate() {
                    a[r][c] = dot(&values[i], &values[j]);
                }
                a[r][size] = Rational::one();
                a[size][r] = Rational::one();
            }
            b[size] = Rational::one();
            let Some(sol) = solve_square(a, b) else { return };
            if sol[..size].iter().any(|x| x.is_negative()) {
                return;
            }
            let mut lambda = vec![Rational::zero(); k];
            for (r, &i) in face.iter().enumerate() {
                lambda[i] = sol[r].clone();
            }
            let p = interpolate(values, &lambda);
            let value = dot(&p, &p);
            if best.as_ref().is_none_or(|(v, _)| value < *v) {
                best = Some((value, lambda));
            }
        });
    }
    match best {
        Some((value, lambda)) => (ExactRadius::sqrt(value), lambda),
        None => {
            let v = &values[0];
            (ExactRadius::sqrt(dot(v, v)), unit(k, 0))
        }
    }
}

/// Exact minimum of `|Σ λᵢ vᵢ|` over the standard simplex, with a minimiser.
pub fn simplex_norm_min(values: &[Vec<Rational>], norm: Norm) -> Result<NormMin, Error> {
    let Some(first) = values.first() else {
        return Err(Error::DimensionMismatch("simplex without vertices".into()));
    };
    let n = first.len();
    if let Some(bad) = values.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("vertex value of length {} in a simplex of {n}-vectors", bad.len())));
    }
    let k = values.len();
    let norms: Vec<ExactRadius> = values.iter().map(|v| norm.of(v)).collect();
    let best = (0..k).min_by(|&a, &b| norms[a].cmp(&norms[b]).then(a.cmp(&b))).expect("non-empty");
    let at_best = NormMin { min: norms[best].clone(), argmin: unit(k, best), at_vertex: true };
    if k == 1 || vertex_certificate(values, norm, best) {
        return Ok(at_best);
    }
    let (min, argmin) = match norm {
        Norm::L2 => l2_min(values),
        Norm::L1 | Norm::Linf => lp_min(values, norm),
    };
    if min >= norms[best] {
        return Ok(at_best);
    }
    Ok(NormMin { min, argmin, at_vertex: false })
}
