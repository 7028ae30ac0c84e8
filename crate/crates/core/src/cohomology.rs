//! Global sections of line bundles on towers.
//!
//! Pushing `O(b_1, ..., b_j)` down the last P^1-bundle gives
//! `⊕_{i=0}^{b_j} O(b_1, ..., b_{j-1}) ⊗ L_{j-1}^{-i}`, so `h^0` is a nested
//! lattice sum that bottoms out at `h^0(P^1, O(b)) = b + 1`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::{DivisorClass, Error, Result, TowerSpec, Q};

fn integral_coords(tower: &TowerSpec, class: &DivisorClass) -> Result<Vec<i64>> {
    if class.len() != tower.dim() {
        return Err(Error::DimensionMismatch {
            expected: tower.dim(),
            found: class.len(),
        });
    }
    class
        .to_integers()
        .ok_or_else(|| Error::NotIntegral(class.to_string()))
}

/// `h^0(tower, O(D))` for an integral class.
pub fn h0(tower: &TowerSpec, class: &DivisorClass) -> Result<u128> {
    let coords = integral_coords(tower, class)?;
    Ok(h0_coords(tower, &coords))
}

/// [`h0`] on raw integer coordinates; `coords.len()` selects the level.
pub fn h0_coords(tower: &TowerSpec, coords: &[i64]) -> u128 {
    assert!(!coords.is_empty() && coords.len() <= tower.dim());
    let mut memo = HashMap::new();
    h0_rec(tower, coords, &mut memo)
}

fn h0_rec(tower: &TowerSpec, coords: &[i64], memo: &mut HashMap<Vec<i64>, u128>) -> u128 {
    let level = coords.len();
    let top = coords[level - 1];
    if top < 0 {
        return 0;
    }
    if level == 1 {
        return top as u128 + 1;
    }
    if let Some(&hit) = memo.get(coords) {
        return hit;
    }
    let twist = &tower.rows()[level - 2];
    let mut base = coords[..level - 1].to_vec();
    let mut total = 0u128;
    for _ in 0..=top {
        total += h0_rec(tower, &base, memo);
        for (b, c) in base.iter_mut().zip(twist) {
            *b -= c;
        }
    }
    memo.insert(coords.to_vec(), total);
    total
}

/// Fast vanishing test: on a tower whose building matrix has no negative
/// entries, any negative coordinate forces `h^0 = 0`.
///
/// Returns `None` when the hypothesis does not hold (negative matrix entry,
/// non-integral class, or wrong length) and the test must not be used.
pub fn h0_vanishing_precheck(tower: &TowerSpec, class: &DivisorClass) -> Option<bool> {
    if !tower.has_nonnegative_entries() {
        return None;
    }
    let coords = integral_coords(tower, class).ok()?;
    Some(coords.iter().any(|&c| c < 0))
}

/// Δ-genus `D^d + d - h^0(D)`.
pub fn delta_genus(tower: &TowerSpec, class: &DivisorClass) -> Result<BigInt> {
    let sections = h0(tower, class)?;
    let top = tower.self_intersection(class)?;
    debug_assert!(top.is_integer());
    Ok(top.to_integer() + BigInt::from(tower.dim()) - BigInt::from(sections))
}

/// Iterated forward differences of an integer sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceTable {
    /// `(m, value)` pairs, consecutive in `m`.
    pub samples: Vec<(i64, BigInt)>,
    /// `differences[j]` holds the `j`-th differences; row 0 is the samples.
    pub differences: Vec<Vec<BigInt>>,
    /// The difference order that is expected to be constant.
    pub order: usize,
    pub stabilized: bool,
    /// The constant `order`-th difference, when stabilized.
    pub leading: Option<Q>,
}

impl DifferenceTable {
    pub fn from_samples(samples: Vec<(i64, BigInt)>, order: usize) -> Self {
        let mut differences = vec![samples.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>()];
        for j in 1..=order {
            let prev = &differences[j - 1];
            let next = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
            differences.push(next);
        }
        let last = &differences[order];
        let stabilized = last.len() >= 2 && last.iter().all(|v| v == &last[0]);
        let leading = stabilized.then(|| Q::from_integer(last[0].clone()));
        DifferenceTable {
            samples,
            differences,
            order,
            stabilized,
            leading,
        }
    }
}

/// Samples `h^0(mD)` for `m = m_start ..= m_start + window` and takes
/// `dim`-th differences. For a free class with vanishing higher cohomology
/// the stabilized value is `D^dim`.
///
/// `window` must be at least `dim + 1` so that two top differences exist.
pub fn top_intersection_oracle(
    tower: &TowerSpec,
    class: &DivisorClass,
    m_start: i64,
    window: usize,
) -> Result<DifferenceTable> {
    let d = tower.dim();
    if window < d + 1 {
        return Err(Error::Parameter(format!(
            "window {window} too small for dimension {d}; need at least {}",
            d + 1
        )));
    }
    let base = integral_coords(tower, class)?;
    let samples = (m_start..=m_start + window as i64)
        .map(|m| {
            let coords: Vec<i64> = base.iter().map(|b| b * m).collect();
            (m, BigInt::from(h0_coords(tower, &coords)))
        })
        .collect();
    Ok(DifferenceTable::from_samples(samples, d))
}

/// Runs [`top_intersection_oracle`] from `m_start = 1`, moving the window up
/// until it stabilizes or `m_start` exceeds `max_start`.
pub fn stabilized_top_intersection(
    tower: &TowerSpec,
    class: &DivisorClass,
    window: usize,
    max_start: i64,
) -> Result<DifferenceTable> {
    let mut start = 1;
    loop {
        let table = top_intersection_oracle(tower, class, start, window)?;
        if table.stabilized || start >= max_start {
            return Ok(table);
        }
        start += 1;
    }
}

/// `h^0` as a [`BigInt`], for callers mixing it with rational arithmetic.
pub fn h0_big(tower: &TowerSpec, class: &DivisorClass) -> Result<BigInt> {
    h0(tower, class).map(BigInt::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn y_tower(n: usize, e: i64) -> TowerSpec {
        let rows = (1..n)
            .map(|i| {
                let mut row = vec![1; i];
                row[0] = e;
                row
            })
            .collect();
        TowerSpec::from_rows(rows).unwrap()
    }

    #[test]
    fn h0_examples() {
        let f3 = y_tower(2, 3);
        assert_eq!(h0(&f3, &DivisorClass::from_ints(&[3, 1])).unwrap(), 5);
        let p1 = TowerSpec::point_line();
        assert_eq!(h0(&p1, &DivisorClass::from_ints(&[-1])).unwrap(), 0);
        assert_eq!(h0(&p1, &DivisorClass::from_ints(&[4])).unwrap(), 5);

        let y3 = y_tower(3, 2);
        assert_eq!(h0(&y3, &DivisorClass::from_ints(&[2, 1, 1])).unwrap(), 5);

        let w = TowerSpec::from_rows(vec![vec![2], vec![4, 2]]).unwrap();
        assert_eq!(h0(&w, &DivisorClass::from_ints(&[4, 2, 2])).unwrap(), 10);
    }

    #[test]
    fn h0_rejects_fractional() {
        let f3 = y_tower(2, 3);
        let half = crate::format::parse_divisor("1,1/2").unwrap();
        assert!(matches!(h0(&f3, &half), Err(Error::NotIntegral(_))));
        assert!(h0(&f3, &DivisorClass::from_ints(&[1])).is_err());
    }

    #[test]
    fn precheck_examples() {
        let y3 = y_tower(3, 2);
        let c = DivisorClass::from_ints(&[4, -1, 2]);
        assert_eq!(h0_vanishing_precheck(&y3, &c), Some(true));
        assert_eq!(h0(&y3, &c).unwrap(), 0);
        let zero = DivisorClass::zero(3);
        assert_eq!(h0_vanishing_precheck(&y3, &zero), Some(false));
        assert_eq!(h0(&y3, &zero).unwrap(), 1);

        let y5 = y_tower(5, 3);
        let c = DivisorClass::from_ints(&[4, 1, 1, 1, -3]);
        assert_eq!(h0_vanishing_precheck(&y5, &c), Some(true));

        let negative = TowerSpec::from_rows(vec![vec![-1]]).unwrap();
        assert_eq!(h0_vanishing_precheck(&negative, &DivisorClass::from_ints(&[-1, 1])), None);
        // on a tower with a negative twist the gate matters: Σ_2 - Σ_1 has sections
        assert_eq!(h0(&negative, &DivisorClass::from_ints(&[-1, 1])).unwrap(), 1);
    }

    #[test]
    fn delta_genus_examples() {
        let y4 = y_tower(4, 3);
        let l4 = y4.top_class().unwrap();
        assert_eq!(delta_genus(&y4, &l4).unwrap(), BigInt::zero());
        let p1 = TowerSpec::point_line();
        assert_eq!(delta_genus(&p1, &DivisorClass::from_ints(&[0])).unwrap(), BigInt::zero());
        assert_eq!(delta_genus(&p1, &DivisorClass::from_ints(&[2])).unwrap(), BigInt::zero());
    }

    #[test]
    fn oracle_examples() {
        let f2 = y_tower(2, 2);
        let l2 = f2.top_class().unwrap();
        let table = top_intersection_oracle(&f2, &l2, 1, 3).unwrap();
        let values: Vec<BigInt> = table.samples.iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(values, [4, 9, 16, 25].map(BigInt::from));
        assert!(table.stabilized);
        assert_eq!(table.leading, Some(Q::from_integer(2.into())));

        let y3 = y_tower(3, 2);
        let zero = DivisorClass::zero(3);
        let table = top_intersection_oracle(&y3, &zero, 1, 5).unwrap();
        assert!(table.samples.iter().all(|(_, v)| v == &BigInt::one()));
        assert_eq!(table.leading, Some(Q::zero()));

        let l3 = y3.top_class().unwrap();
        let table = top_intersection_oracle(&y3, &l3, 1, 5).unwrap();
        assert_eq!(table.leading, Some(y3.self_intersection(&l3).unwrap()));
        assert_eq!(table.leading, Some(Q::from_integer(2.into())));

        assert!(top_intersection_oracle(&y3, &l3, 1, 3).is_err());
    }

    #[test]
    fn unstable_sequence_reported() {
        let samples = [1, 2, 4, 8, 16].iter().enumerate().map(|(i, &v)| (i as i64, BigInt::from(v))).collect();
        let table = DifferenceTable::from_samples(samples, 2);
        assert!(!table.stabilized);
        assert_eq!(table.leading, None);
        assert_eq!(table.differences[2].len(), 3);
    }
}
