use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::classes::PointedModule;
use crate::error::{Error, Result};
use crate::exact::{ExactRadius, Field};

/// The half-open interval `(birth, death]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub birth: ExactRadius,
    pub death: ExactRadius,
}

impl Interval {
    pub fn new(birth: ExactRadius, death: ExactRadius) -> Result<Interval> {
        if birth >= death {
            return Err(Error::Invariant(format!("empty interval ({birth}, {death}]")));
        }
        Ok(Interval { birth, death })
    }

    /// Interval spanned by the samples `i..=j` of a module.
    pub(crate) fn from_samples(samples: &[ExactRadius], i: usize, j: usize) -> Interval {
        let birth = if i == 0 { ExactRadius::zero() } else { samples[i - 1].clone() };
        Interval { birth, death: samples[j].clone() }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.birth, self.death)
    }
}

/// A multiset of intervals with at most one distinguished member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointedBarcode {
    pub bars: BTreeMap<Interval, usize>,
    pub distinguished: Option<Interval>,
}

impl PointedBarcode {
    pub fn new(bars: BTreeMap<Interval, usize>, distinguished: Option<Interval>) -> Result<PointedBarcode> {
        let barcode = PointedBarcode { bars, distinguished };
        barcode.validate()?;
        Ok(barcode)
    }

    pub fn validate(&self) -> Result<()> {
        if self.bars.values().any(|&m| m == 0) {
            return Err(Error::Invariant("bar with multiplicity 0".into()));
        }
        if let Some(d) = &self.distinguished {
            if !self.bars.contains_key(d) {
                return Err(Error::Invariant(format!("distinguished bar {d} is not in the barcode")));
            }
        }
        Ok(())
    }

    pub fn total(&self) -> usize {
        self.bars.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Every bar repeated by multiplicity, in order.
    pub fn expanded(&self) -> Vec<Interval> {
        self.bars.iter().flat_map(|(bar, &m)| std::iter::repeat(bar.clone()).take(m)).collect()
    }

    /// Number of bars containing the radius `r`.
    pub fn alive_at(&self, r: &ExactRadius) -> usize {
        self.bars.iter().filter(|(bar, _)| bar.birth < *r && *r <= bar.death).map(|(_, &m)| m).sum()
    }

    pub(crate) fn add(&mut self, bar: Interval, multiplicity: usize) {
        if multiplicity > 0 {
            *self.bars.entry(bar).or_insert(0) += multiplicity;
        }
    }
}

impl fmt::Display for PointedBarcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (bar, &m) in &self.bars {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{bar}")?;
            if m > 1 {
                write!(f, "x{m}")?;
            }
            if self.distinguished.as_ref() == Some(bar) {
                write!(f, "*")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn module_field(module: &PointedModule) -> Result<Field> {
    module.field().ok_or_else(|| Error::Input("barcodes need field coefficients".into()))
}

/// Distinguished interval of a module whose bars are already known.
pub(crate) fn distinguished_bar(module: &PointedModule) -> Option<Interval> {
    if let Some(rho) = &module.injected {
        return (!rho.is_zero()).then(|| Interval { birth: ExactRadius::zero(), death: rho.clone() });
    }
    let last = (0..module.len()).take_while(|&i| !module.distinguished[i].iter().all(Zero::is_zero)).last()?;
    Some(Interval::from_samples(&module.samples, 0, last))
}

/// Pointed barcode by inclusion-exclusion on ranks of composite transitions.
///
/// The bar on samples `i..=j` has multiplicity
/// `rk(i,j) − rk(i−1,j) − rk(i,j+1) + rk(i−1,j+1)`, where ranks involving
/// an index outside the sample range are 0.
pub fn barcode(module: &PointedModule) -> Result<PointedBarcode> {
    let field = module_field(module)?;
    module.validate()?;
    let k = module.len();
    // rk[i][j] for i ≤ j.
    let mut rk = vec![vec![0usize; k]; k];
    for (i, row) in rk.iter_mut().enumerate() {
        let mut m = crate::exact::RatMatrix::identity(module.dims()[i]);
        for j in i..k {
            row[j] = field.rank(&m);
            if j + 1 < k {
                m = field.reduce_matrix(&module.transitions[j].mul(&m));
            }
        }
    }
    let rank = |i: isize, j: usize| -> isize {
        if i < 0 || j >= k || (i as usize) > j {
            0
        } else {
            rk[i as usize][j] as isize
        }
    };
    let mut out = PointedBarcode::default();
    for i in 0..k {
        for j in i..k {
            let (ii, jj) = (i as isize, j);
            let m = rank(ii, jj) - rank(ii - 1, jj) - rank(ii, jj + 1) + rank(ii - 1, jj + 1);
            if m < 0 {
                return Err(Error::Invariant(format!("negative multiplicity on samples {i}..={j}")));
            }
            out.add(Interval::from_samples(&module.samples, i, j), m as usize);
        }
    }
    out.distinguished = distinguished_bar(module);
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::Mode;
    use crate::exact::{integer, RatMatrix};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect())
    }

    fn bar(b: i64, d: i64) -> Interval {
        Interval::new(ExactRadius::int(b), ExactRadius::int(d)).unwrap()
    }

    #[test]
    fn two_point_bars() {
        let module = PointedModule::over_field(
            Mode::Signs,
            Field::Prime(2),
            vec![ExactRadius::int(1), ExactRadius::int(2)],
            vec![RatMatrix::zeros(0, 2)],
            vec![vec![integer(1), integer(1)], vec![]],
        )
        .unwrap();
        let b = barcode(&module).unwrap();
        assert_eq!(b.bars.get(&bar(0, 1)), Some(&2));
        assert_eq!(b.total(), 2);
        assert_eq!(b.distinguished, Some(bar(0, 1)));
    }

    #[test]
    fn merging_and_births() {
        // dims (2, 2, 1): e₁ persists to the end, e₂ dies at once, a new
        // class is born at the second sample and dies at the third.
        let module = PointedModule::over_field(
            Mode::Hopf,
            Field::Prime(2),
            vec![ExactRadius::int(1), ExactRadius::int(2), ExactRadius::int(3)],
            vec![m(&[&[1, 0], &[0, 0]]), m(&[&[1, 0]])],
            vec![vec![integer(1), integer(0)], vec![integer(1), integer(0)], vec![integer(1)]],
        )
        .unwrap();
        let b = barcode(&module).unwrap();
        assert_eq!(b.bars.get(&bar(0, 3)), Some(&1));
        assert_eq!(b.bars.get(&bar(0, 1)), Some(&1));
        assert_eq!(b.bars.get(&bar(1, 2)), Some(&1));
        assert_eq!(b.total(), 3);
        assert_eq!(b.distinguished, Some(bar(0, 3)));
        for (i, r) in module.samples.iter().enumerate() {
            assert_eq!(b.alive_at(r), module.dims()[i]);
        }
    }

    #[test]
    fn zero_distinguished_has_no_bar() {
        let module = PointedModule::over_field(
            Mode::Circle,
            Field::Rationals,
            vec![ExactRadius::int(1)],
            vec![],
            vec![vec![integer(0)]],
        )
        .unwrap();
        let b = barcode(&module).unwrap();
        assert_eq!(b.total(), 1);
        assert_eq!(b.distinguished, None);
    }
}
