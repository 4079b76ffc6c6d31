use super::barcode::{Interval, PointedBarcode};
use crate::exact::{ExactRadius, Gap};

/// A witness for the pointed bottleneck condition at some δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(Interval, Interval)>,
    pub unmatched_left: Vec<Interval>,
    pub unmatched_right: Vec<Interval>,
    /// Whether the distinguished bars are paired with each other.
    pub distinguished_paired: bool,
}

#[derive(Clone, Copy)]
enum Bound {
    /// Unmatched bars must be shorter than 2δ.
    Strict,
    /// Unmatched bars may have length exactly 2δ.
    Relaxed,
}

fn close(u: &Interval, v: &Interval, delta: &Gap) -> bool {
    Gap::between(&u.birth, &v.birth) <= *delta && Gap::between(&u.death, &v.death) <= *delta
}

fn short(u: &Interval, delta: &Gap, bound: Bound) -> bool {
    let half = Gap::between(&u.death, &u.birth).half();
    match bound {
        Bound::Strict => half < *delta,
        Bound::Relaxed => half <= *delta,
    }
}

fn without(bars: &[Interval], bar: &Option<Interval>) -> Vec<Interval> {
    let mut rest = bars.to_vec();
    if let Some(d) = bar {
        let at = rest.iter().position(|x| x == d).expect("distinguished bar is in the barcode");
        rest.remove(at);
    }
    rest
}

/// Kuhn's augmenting paths on the bipartite graph with diagonal copies:
/// left = bars of `a` then one diagonal slot per bar of `b`, right = bars of
/// `b` then one diagonal slot per bar of `a`.
fn match_ordinary(a: &[Interval], b: &[Interval], delta: &Gap, bound: Bound) -> Option<Matching> {
    let (na, nb) = (a.len(), b.len());
    let n = na + nb;
    let a_short: Vec<bool> = a.iter().map(|u| short(u, delta, bound)).collect();
    let b_short: Vec<bool> = b.iter().map(|v| short(v, delta, bound)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, bar) in a.iter().enumerate() {
        adj[u].extend((0..nb).filter(|&v| close(bar, &b[v], delta)));
        if a_short[u] {
            adj[u].push(nb + u);
        }
    }
    for v in 0..nb {
        let row = &mut adj[na + v];
        if b_short[v] {
            row.push(v);
        }
        row.extend(nb..nb + na);
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(x: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                if owner[y].is_none_or(|z| augment(z, adj, seen, owner)) {
                    owner[y] = Some(x);
                    return true;
                }
            }
        }
        false
    }
    for x in 0..n {
        let mut seen = vec![false; n];
        if !augment(x, &adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut matching =
        Matching { pairs: Vec::new(), unmatched_left: Vec::new(), unmatched_right: Vec::new(), distinguished_paired: false };
    for (y, x) in owner.iter().enumerate() {
        let x = x.expect("perfect matching");
        match (x < na, y < nb) {
            (true, true) => matching.pairs.push((a[x].clone(), b[y].clone())),
            (true, false) => matching.unmatched_left.push(a[x].clone()),
            (false, true) => matching.unmatched_right.push(b[y].clone()),
            (false, false) => {}
        }
    }
    Some(matching)
}

fn feasible(a: &PointedBarcode, b: &PointedBarcode, delta: &Gap, bound: Bound) -> Option<Matching> {
    let (ea, eb) = (a.expanded(), b.expanded());
    if let (Some(da), Some(db)) = (&a.distinguished, &b.distinguished) {
        if close(da, db, delta) {
            let rest = match_ordinary(&without(&ea, &a.distinguished), &without(&eb, &b.distinguished), delta, bound);
            if let Some(mut m) = rest {
                m.pairs.insert(0, (da.clone(), db.clone()));
                m.distinguished_paired = true;
                return Some(m);
            }
        }
    }
    let lone_ok = [&a.distinguished, &b.distinguished].iter().all(|d| d.as_ref().is_none_or(|d| short(d, delta, bound)));
    if !lone_ok {
        return None;
    }
    let mut m = match_ordinary(&without(&ea, &a.distinguished), &without(&eb, &b.distinguished), delta, bound)?;
    m.unmatched_left.extend(a.distinguished.clone());
    m.unmatched_right.extend(b.distinguished.clone());
    Some(m)
}

/// A pointed δ-matching, if one exists; unmatched bars must be strictly
/// shorter than 2δ.
pub fn feasible_matching(a: &PointedBarcode, b: &PointedBarcode, delta: &ExactRadius) -> Option<Matching> {
    feasible(a, b, &Gap::of(delta), Bound::Strict)
}

/// Whether the pointed bottleneck distance is at most `delta`, i.e. whether a
/// matching exists for every δ′ > `delta`.
pub fn feasible_within(a: &PointedBarcode, b: &PointedBarcode, delta: &Gap) -> bool {
    feasible(a, b, delta, Bound::Relaxed).is_some()
}

fn candidates(a: &PointedBarcode, b: &PointedBarcode) -> Vec<Gap> {
    let mut out = vec![Gap::zero()];
    let (ka, kb): (Vec<&Interval>, Vec<&Interval>) = (a.bars.keys().collect(), b.bars.keys().collect());
    for u in &ka {
        for v in &kb {
            out.push(Gap::between(&u.birth, &v.birth));
            out.push(Gap::between(&u.death, &v.death));
        }
    }
    out.extend(ka.iter().chain(&kb).map(|u| Gap::between(&u.death, &u.birth).half()));
    out.sort();
    out.dedup();
    out
}

/// Pointed bottleneck distance: the least candidate value at which a
/// matching exists with non-strict bounds.
pub fn bottleneck(a: &PointedBarcode, b: &PointedBarcode) -> Gap {
    let cands = candidates(a, b);
    let (mut lo, mut hi) = (0, cands.len() - 1);
    debug_assert!(feasible_within(a, b, &cands[hi]));
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible_within(a, b, &cands[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    cands[lo].clone()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::exact::ratio;

    fn bar(b: i64, d: i64) -> Interval {
        Interval::new(ExactRadius::int(b), ExactRadius::int(d)).unwrap()
    }

    fn code(bars: &[(Interval, usize)], distinguished: Option<Interval>) -> PointedBarcode {
        PointedBarcode::new(bars.iter().cloned().collect::<BTreeMap<_, _>>(), distinguished).unwrap()
    }

    fn rat(p: i64, q: i64) -> ExactRadius {
        ExactRadius::rat(ratio(p, q))
    }

    #[test]
    fn identical_barcodes() {
        let a = code(&[(bar(0, 1), 2), (bar(1, 3), 1)], Some(bar(0, 1)));
        let m = feasible_matching(&a, &a, &ExactRadius::zero()).unwrap();
        assert!(m.distinguished_paired);
        assert_eq!(m.pairs.len(), 3);
        assert_eq!(bottleneck(&a, &a).as_radius(), Some(ExactRadius::zero()));
    }

    #[test]
    fn lone_distinguished_bar() {
        let a = code(&[(bar(0, 1), 1)], Some(bar(0, 1)));
        let empty = PointedBarcode::default();
        assert!(feasible_matching(&a, &empty, &rat(1, 2)).is_none());
        assert!(feasible_matching(&a, &empty, &rat(51, 100)).is_some());
        let plain = code(&[(bar(0, 1), 1)], None);
        assert!(feasible_matching(&a, &plain, &rat(1, 2)).is_none());
        assert!(feasible_matching(&a, &plain, &rat(51, 100)).is_some());
        assert_eq!(bottleneck(&a, &plain).as_radius(), Some(rat(1, 2)));
        assert_eq!(bottleneck(&a, &empty).as_radius(), Some(rat(1, 2)));
    }

    #[test]
    fn shifted_bar() {
        let a = code(&[(bar(0, 1), 1)], None);
        let b = code(&[(bar(0, 2), 1)], None);
        assert_eq!(bottleneck(&a, &b).as_radius(), Some(ExactRadius::int(1)));
        assert_eq!(bottleneck(&b, &a).as_radius(), Some(ExactRadius::int(1)));
    }

    #[test]
    fn irrational_distance_stays_symbolic() {
        let root = ExactRadius::sqrt(ratio(2, 1));
        let a = code(&[(Interval::new(ExactRadius::zero(), root.clone()).unwrap(), 1)], None);
        let b = code(&[(Interval::new(ExactRadius::zero(), ExactRadius::int(2)).unwrap(), 1)], None);
        let d = bottleneck(&a, &b);
        assert!(d.as_radius().is_none());
        assert!((d.to_f64() - (2.0 - 2f64.sqrt())).abs() < 1e-12);
    }
}
