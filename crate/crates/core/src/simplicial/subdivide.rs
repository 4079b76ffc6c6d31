//! Starring at simplexwise minimisers and at transversal zeros of the
//! component functions, until every simplex attains `min |f|` at a vertex and
//! no component changes sign inside an edge.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};

use super::{Complex, PLMap};
use crate::error::{Error, Result};
use crate::exact::{format_rational, simplex_norm_min, Rational};

/// Result of [`star_subdivide_traced`]: the subdivided map together with the
/// position of every new vertex in barycentric coordinates of the original
/// vertices (sparse, sorted by original vertex index).
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub map: PLMap,
    pub positions: Vec<Vec<(usize, Rational)>>,
}

struct Point {
    position: BTreeMap<usize, Rational>,
    value: Vec<Rational>,
    label: String,
}

struct Workspace<'a> {
    f: &'a PLMap,
    points: Vec<Point>,
    simplices: BTreeSet<Vec<usize>>,
    labels: HashSet<String>,
}

impl Workspace<'_> {
    fn sort_key(&self, simplex: &[usize]) -> Vec<&str> {
        let mut key: Vec<&str> = simplex.iter().map(|&p| self.points[p].label.as_str()).collect();
        key.sort_unstable();
        key
    }

    fn ordered(&self, dim: usize) -> Vec<Vec<usize>> {
        let mut list: Vec<Vec<usize>> = self.simplices.iter().filter(|s| s.len() == dim + 1).cloned().collect();
        list.sort_by_cached_key(|s| self.sort_key(s).into_iter().map(String::from).collect::<Vec<_>>());
        list
    }

    fn label_for(&mut self, position: &BTreeMap<usize, Rational>) -> String {
        let complex = self.f.complex();
        let mut parts: Vec<(String, String)> =
            position.iter().map(|(&v, w)| (complex.vertex_id(v).to_string(), format_rational(w))).collect();
        parts.sort();
        let body: Vec<String> = parts.into_iter().map(|(id, w)| format!("{id}:{w}")).collect();
        let mut label = format!("<{}>", body.join("|"));
        while self.labels.contains(&label) {
            label.push('\'');
        }
        self.labels.insert(label.clone());
        label
    }

    /// Stars the simplex `face` at the point with barycentric weights `weights`.
    fn star(&mut self, face: &[usize], weights: &[Rational]) {
        let mut position: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut value = vec![Rational::zero(); self.f.n()];
        for (&p, w) in face.iter().zip(weights) {
            for (&v, x) in &self.points[p].position {
                *position.entry(v).or_insert_with(Rational::zero) += w * x;
            }
            for (acc, x) in value.iter_mut().zip(&self.points[p].value) {
                *acc += w * x;
            }
        }
        position.retain(|_, w| !w.is_zero());
        let label = self.label_for(&position);
        let w = self.points.len();
        self.points.push(Point { position, value, label });

        let containing: Vec<Vec<usize>> =
            self.simplices.iter().filter(|t| face.iter().all(|v| t.binary_search(v).is_ok())).cloned().collect();
        for t in &containing {
            self.simplices.remove(t);
        }
        for t in &containing {
            let k = t.len();
            for mask in 0u64..(1u64 << k) {
                let rho: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| t[i]).collect();
                if face.iter().all(|v| rho.binary_search(v).is_ok()) {
                    continue;
                }
                let mut s = rho;
                s.push(w);
                self.simplices.insert(s);
            }
        }
    }

    fn argmin_pass(&mut self) -> bool {
        let mut changed = false;
        let top = self.simplices.iter().map(Vec::len).max().unwrap_or(1) - 1;
        for dim in (1..=top).rev() {
            for simplex in self.ordered(dim) {
                if !self.simplices.contains(&simplex) {
                    continue;
                }
                let values: Vec<Vec<Rational>> = simplex.iter().map(|&p| self.points[p].value.clone()).collect();
                let nm = simplex_norm_min(&values, self.f.norm()).expect("uniform codomain");
                if nm.at_vertex {
                    continue;
                }
                let (face, weights): (Vec<usize>, Vec<Rational>) = simplex
                    .iter()
                    .zip(nm.argmin)
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(&p, w)| (p, w))
                    .unzip();
                self.star(&face, &weights);
                changed = true;
            }
        }
        changed
    }

    fn zero_pass(&mut self) -> bool {
        let mut changed = false;
        for i in 0..self.f.n() {
            for edge in self.ordered(1) {
                if !self.simplices.contains(&edge) {
                    continue;
                }
                let a = &self.points[edge[0]].value[i];
                let b = &self.points[edge[1]].value[i];
                if a.signum() * b.signum() >= Rational::zero() {
                    continue;
                }
                let t = a / (a - b);
                let weights = [Rational::one() - &t, t];
                self.star(&edge, &weights);
                changed = true;
            }
        }
        changed
    }
}

/// Default limit on subdivision rounds: ten per simplex of the input.
pub fn default_round_budget(f: &PLMap) -> usize {
    10 * f.complex().len()
}

pub fn star_subdivide(f: &PLMap) -> Result<PLMap> {
    Ok(star_subdivide_traced(f, default_round_budget(f))?.map)
}

pub fn star_subdivide_traced(f: &PLMap, budget: usize) -> Result<Subdivision> {
    let complex = f.complex();
    let points: Vec<Point> = (0..complex.vertex_count())
        .map(|v| Point {
            position: BTreeMap::from([(v, Rational::one())]),
            value: f.value(v).to_vec(),
            label: complex.vertex_id(v).to_string(),
        })
        .collect();
    let labels = complex.vertices().iter().cloned().collect();
    let simplices = complex.all_simplices().cloned().collect();
    let mut ws = Workspace { f, points, simplices, labels };
    let mut rounds = 0;
    loop {
        let moved = ws.argmin_pass();
        let split = ws.zero_pass();
        if !moved && !split {
            break;
        }
        rounds += 1;
        if rounds > budget {
            return Err(Error::SubdivisionBudget(budget));
        }
    }
    if ws.points.len() == complex.vertex_count() {
        return Ok(Subdivision {
            map: f.clone(),
            positions: (0..complex.vertex_count()).map(|v| vec![(v, Rational::one())]).collect(),
        });
    }

    let mut order: Vec<usize> = (0..ws.points.len()).collect();
    order.sort_by(|&a, &b| ws.points[a].label.cmp(&ws.points[b].label));
    let mut rank = vec![0; ws.points.len()];
    for (i, &p) in order.iter().enumerate() {
        rank[p] = i;
    }
    let labels: Vec<String> = order.iter().map(|&p| ws.points[p].label.clone()).collect();
    let tops = ws.simplices.iter().map(|s| {
        let mut t: Vec<usize> = s.iter().map(|&p| rank[p]).collect();
        t.sort_unstable();
        t
    });
    let subdivided = Complex::from_indexed(labels, tops);
    let values = order.iter().map(|&p| ws.points[p].value.clone()).collect();
    let positions = order.iter().map(|&p| ws.points[p].position.iter().map(|(&v, w)| (v, w.clone())).collect()).collect();
    let map = PLMap::new(subdivided, values, f.n(), f.norm())?;
    Ok(Subdivision { map, positions })
}
