use num_traits::{Signed, Zero};
use rand::Rng;

use crate::cohomology::CochainComplex;
use crate::error::{Error, Result};
use crate::exact::{Int, Rational};
use crate::simplicial::PLMap;

/// Attempts made by [`choose_ray`] and [`super::degree::choose_probe`].
pub const MAX_ATTEMPTS: usize = 32;

fn cross(e: &[Rational], x: &[Rational]) -> Rational {
    &e[0] * &x[1] - &e[1] * &x[0]
}

fn dot(e: &[Rational], x: &[Rational]) -> Rational {
    &e[0] * &x[0] + &e[1] * &x[1]
}

/// Whether no non-zero vertex value of `f` lies on the line through `e`.
pub fn ray_is_admissible(f: &PLMap, e: &[Rational]) -> bool {
    f.values().iter().all(|x| x.iter().all(Zero::is_zero) || !cross(e, x).is_zero())
}

/// A random small integer direction admissible for every vertex value of `f`.
pub fn choose_ray(f: &PLMap, rng: &mut impl Rng) -> Result<Vec<Rational>> {
    for _ in 0..MAX_ATTEMPTS {
        let a: i64 = rng.gen_range(-97..=97);
        let b: i64 = rng.gen_range(-97..=97);
        if a == 0 && b == 0 {
            continue;
        }
        let e = vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())];
        if ray_is_admissible(f, &e) {
            return Ok(e);
        }
    }
    Err(Error::DegenerateProbe("ray", MAX_ATTEMPTS))
}

/// Signed crossings of the edge images with the open ray `ℝ⁺·e`: a cocycle
/// on the support of `cc` representing the pull-back of the generator of `H¹(S¹)`.
pub fn winding_cocycle(f: &PLMap, cc: &CochainComplex<'_>, e: &[Rational]) -> Result<Vec<Int>> {
    if f.n() != 2 {
        return Err(Error::ModeInapplicable(format!("winding cocycles need n = 2, got n = {}", f.n())));
    }
    let edges = f.complex().simplices(1);
    cc.cells(1)
        .iter()
        .map(|&i| {
            let (p, q) = (f.value(edges[i][0]), f.value(edges[i][1]));
            let (cp, cq) = (cross(e, p), cross(e, q));
            if cp.is_zero() || cq.is_zero() {
                return Err(Error::Invariant("vertex value on the line of the ray".into()));
            }
            if cp.is_positive() == cq.is_positive() {
                return Ok(Int::from(0));
            }
            let t = &cp / (&cp - &cq);
            let x: Vec<Rational> = p.iter().zip(q).map(|(a, b)| a + &t * (b - a)).collect();
            let along = dot(e, &x);
            if along.is_zero() {
                return Err(Error::Invariant("edge image passes through the origin".into()));
            }
            if along.is_negative() {
                return Ok(Int::from(0));
            }
            // Clockwise side to counter-clockwise side counts +1.
            Ok(Int::from(if cp.is_negative() { 1 } else { -1 }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Support;
    use crate::exact::integer;
    use crate::filtration::build_filtration;
    use crate::fixtures;
    use crate::simplicial::star_subdivide;

    fn cycle_sum(f: &PLMap, cc: &CochainComplex<'_>, z: &[Int], cycle: &[&str]) -> Int {
        let x = f.complex();
        let mut total = Int::from(0);
        for i in 0..cycle.len() {
            let (a, b) = (x.vertex_index(cycle[i]).unwrap(), x.vertex_index(cycle[(i + 1) % cycle.len()]).unwrap());
            let (s, sign) = if a < b { (vec![a, b], 1) } else { (vec![b, a], -1) };
            let pos = cc.position(1, x.simplex_index(&s).unwrap()).unwrap();
            total += &(&z[pos] * &Int::from(sign));
        }
        total
    }

    #[test]
    fn constant_map_has_zero_cocycle() {
        let f = fixtures::grid_identity().map_values(|_| vec![integer(1), integer(0)]).unwrap();
        let cc = CochainComplex::new(f.complex(), Support::Whole);
        let z = winding_cocycle(&f, &cc, &[integer(0), integer(1)]).unwrap();
        assert!(z.iter().all(Int::is_zero));
    }

    #[test]
    fn grid_boundary_winds_once() {
        let f = fixtures::grid_identity();
        let filt = build_filtration(&f).unwrap();
        let cc = CochainComplex::new(f.complex(), Support::Absolute(&filt.levels[0]));
        let cycle = ["e", "ne", "n", "nw", "w", "sw", "s", "se"];
        for e in [[1, 3], [-2, 5], [7, -1]] {
            let e = [integer(e[0]), integer(e[1])];
            let z = winding_cocycle(&f, &cc, &e).unwrap();
            assert_eq!(cycle_sum(&f, &cc, &z, &cycle), Int::from(1));
        }
    }

    #[test]
    fn octagon_winds_twice() {
        let f = star_subdivide(&fixtures::octagon()).unwrap();
        let cc = CochainComplex::new(f.complex(), Support::Whole);
        let e = [integer(-1), integer(-2)];
        let z = winding_cocycle(&f, &cc, &e).unwrap();
        // The cycle o0 → <o0|o1> → o1 → … in the subdivided octagon.
        let mut cycle: Vec<String> = Vec::new();
        for i in 0..8 {
            let (a, b) = (format!("o{i}"), format!("o{}", (i + 1) % 8));
            cycle.push(a.clone());
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            cycle.push(format!("<{lo}:1/2|{hi}:1/2>"));
        }
        let cycle: Vec<&str> = cycle.iter().map(String::as_str).collect();
        assert_eq!(cycle_sum(&f, &cc, &z, &cycle), Int::from(2));
    }
}
