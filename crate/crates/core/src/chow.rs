//! Towers of P^1-bundles and their Chow rings.
//!
//! A tower of dimension `d` is built from a lower-triangular integer matrix
//! with `d - 1` rows. Level `k + 1` is `P(O + L_k^{-1})` over level `k`,
//! where `L_k` has coordinates `row k` in the basis of distinguished
//! sections `Σ_1, ..., Σ_k`. The Chow ring is generated by the `Σ_i` subject
//! to
//!
//! ```text
//! Σ_1^2 = 0,    Σ_k^2 = -Σ_k · L_{k-1}   (k >= 2)
//! ```
//!
//! and the point class is `Σ_1 · Σ_2 ··· Σ_d = 1`. Every element therefore
//! has a unique normal form over square-free monomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result, Q};

/// Largest supported tower dimension; index sets are stored as `u64` masks.
pub const MAX_DIM: usize = 63;

/// Building data for a tower of P^1-bundles over P^1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerSpec {
    dim: usize,
    rows: Vec<Vec<i64>>,
}

/// Validates a lower-triangular building matrix. Row `i` (1-based) must have
/// exactly `i` entries; the tower has dimension `rows.len() + 1`.
pub fn tower_from_matrix(rows: Vec<Vec<i64>>) -> Result<TowerSpec> {
    TowerSpec::from_rows(rows)
}

impl TowerSpec {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::MalformedMatrix {
                    row: idx + 1,
                    expected: idx + 1,
                    found: row.len(),
                });
            }
        }
        let dim = rows.len() + 1;
        if dim > MAX_DIM {
            return Err(Error::Parameter(format!(
                "tower dimension {dim} exceeds {MAX_DIM}"
            )));
        }
        Ok(TowerSpec { dim, rows })
    }

    /// P^1 itself.
    pub fn point_line() -> Self {
        TowerSpec {
            dim: 1,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry `c_{i,j}` (1-based, `j <= i < dim`).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn has_nonnegative_entries(&self) -> bool {
        self.rows.iter().flatten().all(|&c| c >= 0)
    }

    /// The sub-tower consisting of the first `level` levels.
    pub fn truncate(&self, level: usize) -> Result<TowerSpec> {
        self.check_index(level, self.dim)?;
        TowerSpec::from_rows(self.rows[..level - 1].to_vec())
    }

    fn check_index(&self, index: usize, max: usize) -> Result<()> {
        if index == 0 || index > max {
            Err(Error::IndexOutOfRange { index, max })
        } else {
            Ok(())
        }
    }

    fn check_class(&self, class: &DivisorClass) -> Result<()> {
        if class.len() != self.dim {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: class.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The distinguished section `Σ_i` pulled back to the top of the tower.
    pub fn section(&self, i: usize) -> Result<DivisorClass> {
        self.check_index(i, self.dim)?;
        Ok(DivisorClass::basis(self.dim, i))
    }

    /// The bundle `L_i` used to build level `i + 1`, padded with zeros.
    pub fn twisting_class(&self, i: usize) -> Result<DivisorClass> {
        self.check_index(i, self.dim - 1)?;
        let mut coeffs = vec![Q::zero(); self.dim];
        for (slot, &c) in coeffs.iter_mut().zip(&self.rows[i - 1]) {
            *slot = Q::from_integer(c.into());
        }
        Ok(DivisorClass::new(coeffs))
    }

    /// `Σ_i + L_{i-1}`: the class restricting trivially to `Σ_i`, for `i >= 2`.
    ///
    /// On the towers of the examples this is the polarization of level `i`
    /// (for instance `(e, 1, ..., 1)` on the first towers and
    /// `(2e, 2, ..., 2, 1)` right above them).
    pub fn level_class(&self, i: usize) -> Result<DivisorClass> {
        if i < 2 {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.dim,
            });
        }
        self.check_index(i, self.dim)?;
        Ok(&self.twisting_class(i - 1)? + &DivisorClass::basis(self.dim, i))
    }

    /// `level_class(dim)`; undefined on P^1.
    pub fn top_class(&self) -> Result<DivisorClass> {
        self.level_class(self.dim)
    }

    /// `-K = (2 + Σ_{i>=1} c_{i,1}, 2 + Σ_{i>=2} c_{i,2}, ..., 2)`.
    pub fn anticanonical_class(&self) -> DivisorClass {
        let coeffs = (1..=self.dim)
            .map(|j| {
                let column: i64 = self.rows.iter().skip(j - 1).map(|row| row[j - 1]).sum();
                Q::from_integer((2 + column).into())
            })
            .collect();
        DivisorClass::new(coeffs)
    }

    pub fn canonical_class(&self) -> DivisorClass {
        -self.anticanonical_class()
    }

    /// Reduces the monomial `coeff · Π Σ_i^{exponents[i-1]}` to its square-free
    /// normal form, always rewriting the highest repeated index first.
    ///
    /// `exponents` must have length `dim`. Degrees above `dim` reduce to zero.
    pub fn reduce(&self, exponents: &[u32], coeff: Q) -> Result<CycleExpression> {
        if exponents.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: exponents.len(),
            });
        }
        // Keys are exponent vectors read from the top index down, so BTreeMap
        // order is reverse-lexicographic. Each rewrite strictly decreases that
        // order, hence popping the largest key first sees all of its
        // contributions merged.
        let mut pending: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        let mut done = CycleExpression::zero();
        if !coeff.is_zero() {
            pending.insert(exponents.iter().rev().copied().collect(), coeff);
        }
        while let Some((key, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            let exps: Vec<u32> = key.iter().rev().copied().collect();
            match exps.iter().rposition(|&e| e >= 2) {
                None => done.add_term(IndexSet::from_exponents(&exps), c),
                Some(0) => {}
                Some(pos) => {
                    // Σ_k^2 -> -Σ_k · L_{k-1}, with k = pos + 1
                    for (j, &entry) in self.rows[pos - 1].iter().enumerate() {
                        if entry == 0 {
                            continue;
                        }
                        let mut next = exps.clone();
                        next[pos] -= 1;
                        next[j] += 1;
                        let term = -(&c * Q::from_integer(entry.into()));
                        let slot = pending
                            .entry(next.into_iter().rev().collect())
                            .or_insert_with(Q::zero);
                        *slot += term;
                    }
                }
            }
        }
        Ok(done)
    }

    /// `reduce` for a monomial given as a list of (1-based, repeatable) indices.
    pub fn reduce_indices(&self, indices: &[usize], coeff: Q) -> Result<CycleExpression> {
        let mut exps = vec![0u32; self.dim];
        for &i in indices {
            self.check_index(i, self.dim)?;
            exps[i - 1] += 1;
        }
        self.reduce(&exps, coeff)
    }

    /// Multiplies a normal-form cycle by a divisor class.
    pub fn multiply(&self, expr: &CycleExpression, class: &DivisorClass) -> Result<CycleExpression> {
        self.check_class(class)?;
        let mut memo = HashMap::new();
        Ok(self.multiply_with(expr, class, &mut memo))
    }

    fn multiply_with(
        &self,
        expr: &CycleExpression,
        class: &DivisorClass,
        memo: &mut HashMap<(IndexSet, usize), CycleExpression>,
    ) -> CycleExpression {
        let mut out = CycleExpression::zero();
        for (set, c) in expr.iter() {
            for (j, b) in class.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let product = self.times_generator(*set, j + 1, memo);
                out.add_scaled(&product, &(c * b));
            }
        }
        out
    }

    // S · Σ_j for a square-free S.
    fn times_generator(
        &self,
        set: IndexSet,
        j: usize,
        memo: &mut HashMap<(IndexSet, usize), CycleExpression>,
    ) -> CycleExpression {
        if !set.contains(j) {
            return CycleExpression::monomial(set.with(j), Q::one());
        }
        if j == 1 {
            return CycleExpression::zero();
        }
        if let Some(hit) = memo.get(&(set, j)) {
            return hit.clone();
        }
        // S already contains Σ_j, so S · Σ_j = -S · L_{j-1}.
        let mut out = CycleExpression::zero();
        for (i, &entry) in self.rows[j - 2].iter().enumerate() {
            if entry == 0 {
                continue;
            }
            let product = self.times_generator(set, i + 1, memo);
            out.add_scaled(&product, &Q::from_integer((-entry).into()));
        }
        memo.insert((set, j), out.clone());
        out
    }

    /// Product of the given classes as a normal-form cycle.
    pub fn product(&self, classes: &[DivisorClass]) -> Result<CycleExpression> {
        for class in classes {
            self.check_class(class)?;
        }
        let mut memo = HashMap::new();
        let mut acc = CycleExpression::monomial(IndexSet::EMPTY, Q::one());
        for class in classes {
            acc = self.multiply_with(&acc, class, &mut memo);
        }
        Ok(acc)
    }

    /// Degree of the zero-dimensional part of a normal-form cycle.
    pub fn degree(&self, expr: &CycleExpression) -> Q {
        expr.coefficient(IndexSet::full(self.dim))
    }

    /// `D_1 · D_2 ··· D_d`; exactly `dim` classes are required.
    pub fn intersection_number(&self, classes: &[DivisorClass]) -> Result<Q> {
        if classes.len() != self.dim {
            return Err(Error::Arity {
                expected: self.dim,
                found: classes.len(),
            });
        }
        Ok(self.degree(&self.product(classes)?))
    }

    /// `D^dim`.
    pub fn self_intersection(&self, class: &DivisorClass) -> Result<Q> {
        let classes = vec![class.clone(); self.dim];
        self.intersection_number(&classes)
    }

    /// Coordinates of `class` in the basis `(Σ_1, L_2', ..., L_d')` where
    /// `L_i' = level_class(i)`.
    ///
    /// `level_class(i)` has coefficient 1 on `Σ_i` and is supported on indices
    /// `<= i`, so back-substitution from the top always succeeds.
    pub fn level_basis_coordinates(&self, class: &DivisorClass) -> Result<Vec<Q>> {
        self.check_class(class)?;
        let mut residual = class.clone();
        let mut coords = vec![Q::zero(); self.dim];
        for i in (2..=self.dim).rev() {
            let beta = residual.coeffs()[i - 1].clone();
            if !beta.is_zero() {
                residual = &residual - &self.level_class(i)?.scale(&beta);
            }
            coords[i - 1] = beta;
        }
        coords[0] = residual.coeffs()[0].clone();
        debug_assert!(residual.coeffs()[1..].iter().all(Zero::is_zero));
        Ok(coords)
    }

    /// Re-expands `(α, β_2, ..., β_d)` into Σ-coordinates.
    pub fn from_level_basis(&self, coords: &[Q]) -> Result<DivisorClass> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        let mut out = DivisorClass::basis(self.dim, 1).scale(&coords[0]);
        for (i, beta) in coords.iter().enumerate().skip(1) {
            out += &self.level_class(i + 1)?.scale(beta);
        }
        Ok(out)
    }

    /// One-sided freeness test: a nonnegative combination of `Σ_1` and the
    /// level classes is free on the example towers. `Unknown` is not a verdict.
    pub fn freeness_certificate(&self, class: &DivisorClass) -> Result<FreenessCertificate> {
        let coords = self.level_basis_coordinates(class)?;
        if coords.iter().all(|c| !c.is_negative()) {
            Ok(FreenessCertificate::Certified(coords))
        } else {
            Ok(FreenessCertificate::Unknown)
        }
    }
}

/// Outcome of [`TowerSpec::freeness_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessCertificate {
    /// `(α, β_2, ..., β_d)`, all nonnegative, with
    /// `D = α Σ_1 + Σ β_i L_i'`.
    Certified(Vec<Q>),
    Unknown,
}

impl FreenessCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, FreenessCertificate::Certified(_))
    }

    pub fn decomposition(&self) -> Option<&[Q]> {
        match self {
            FreenessCertificate::Certified(c) => Some(c),
            FreenessCertificate::Unknown => None,
        }
    }
}

/// A divisor class in Σ-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    coeffs: Vec<Q>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<Q>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        DivisorClass {
            coeffs: coeffs.iter().map(|&c| Q::from_integer(c.into())).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        DivisorClass {
            coeffs: vec![Q::zero(); dim],
        }
    }

    /// `Σ_i` in a tower of dimension `dim` (1-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut out = Self::zero(dim);
        out.coeffs[i - 1] = Q::one();
        out
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if integral and each fits in an `i64`.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn scale(&self, factor: &Q) -> Self {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn scale_int(&self, factor: i64) -> Self {
        self.scale(&Q::from_integer(BigInt::from(factor)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.len(), rhs.len(), "divisor length mismatch");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl AddAssign<&DivisorClass> for DivisorClass {
    fn add_assign(&mut self, rhs: &DivisorClass) {
        *self = &*self + rhs;
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.len(), rhs.len(), "divisor length mismatch");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale_int(self)
    }
}

/// A square-free set of indices `S ⊆ {1, ..., 63}`, standing for `Π_{i∈S} Σ_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn full(dim: usize) -> Self {
        IndexSet(if dim >= 64 { u64::MAX } else { (1u64 << dim) - 1 })
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        indices.iter().fold(Self::EMPTY, |s, &i| s.with(i))
    }

    fn from_exponents(exps: &[u32]) -> Self {
        let mut mask = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            debug_assert!(e <= 1);
            if e == 1 {
                mask |= 1 << i;
            }
        }
        IndexSet(mask)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | (1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Linear combination of square-free monomials; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleExpression {
    terms: BTreeMap<IndexSet, Q>,
}

impl CycleExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(set: IndexSet, coeff: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(set, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, set: IndexSet) -> Q {
        self.terms.get(&set).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, set: IndexSet, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(set).or_insert_with(Q::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn add_scaled(&mut self, other: &CycleExpression, factor: &Q) {
        for (set, c) in other.iter() {
            self.add_term(*set, c * factor);
        }
    }
}

impl fmt::Display for CycleExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (set, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}*{set}")?;
            } else if c.is_negative() {
                write!(f, " - {}*{set}", -c)?;
            } else {
                write!(f, " + {c}*{set}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

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
    fn shapes() {
        assert_eq!(tower_from_matrix(vec![]).unwrap().dim(), 1);
        assert_eq!(tower_from_matrix(vec![vec![3]]).unwrap().dim(), 2);
        let w = tower_from_matrix(vec![vec![2], vec![2, 1], vec![4, 2, 2]]).unwrap();
        assert_eq!(w.dim(), 4);
        assert_eq!(
            tower_from_matrix(vec![vec![2], vec![2]]),
            Err(Error::MalformedMatrix {
                row: 2,
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn twisting_classes() {
        let f3 = TowerSpec::from_rows(vec![vec![3]]).unwrap();
        assert_eq!(f3.twisting_class(1).unwrap(), DivisorClass::from_ints(&[3, 0]));
        let y4 = y_tower(4, 2);
        assert_eq!(y4.twisting_class(3).unwrap(), DivisorClass::from_ints(&[2, 1, 1, 0]));
        assert!(TowerSpec::point_line().twisting_class(1).is_err());
        assert!(y4.twisting_class(0).is_err());
        assert!(y4.twisting_class(4).is_err());
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(y_tower(3, 2).canonical_class(), DivisorClass::from_ints(&[-6, -3, -2]));
        assert_eq!(TowerSpec::point_line().canonical_class(), DivisorClass::from_ints(&[-2]));
    }

    #[test]
    fn reduce_examples() {
        let f3 = TowerSpec::from_rows(vec![vec![3]]).unwrap();
        assert!(f3.reduce_indices(&[1, 1], q(1)).unwrap().is_zero());
        let expected = CycleExpression::monomial(IndexSet::from_indices(&[1, 2]), q(-3));
        assert_eq!(f3.reduce_indices(&[2, 2], q(1)).unwrap(), expected);

        let y3 = y_tower(3, 2);
        let mut expected = CycleExpression::zero();
        expected.add_term(IndexSet::from_indices(&[1, 3]), q(-2));
        expected.add_term(IndexSet::from_indices(&[2, 3]), q(-1));
        assert_eq!(y3.reduce_indices(&[3, 3], q(1)).unwrap(), expected);
        assert_eq!(expected.to_string(), "-2*{1,3} - 1*{2,3}");

        // degree above dim vanishes
        assert!(y3.reduce_indices(&[1, 2, 3, 3], q(1)).unwrap().is_zero());
    }

    #[test]
    fn hirzebruch_anchor() {
        for e in 0..=5 {
            let t = TowerSpec::from_rows(vec![vec![e]]).unwrap();
            let l2 = t.top_class().unwrap();
            assert_eq!(t.self_intersection(&l2).unwrap(), q(e));
            let s2 = t.section(2).unwrap();
            assert_eq!(t.self_intersection(&s2).unwrap(), q(-e));
        }
    }

    #[test]
    fn intersection_examples() {
        let f3 = TowerSpec::from_rows(vec![vec![3]]).unwrap();
        let l2 = DivisorClass::from_ints(&[3, 1]);
        assert_eq!(f3.intersection_number(&[l2.clone(), l2.clone()]).unwrap(), q(3));
        assert_eq!(
            f3.intersection_number(&[l2]),
            Err(Error::Arity {
                expected: 2,
                found: 1
            })
        );

        let y4 = y_tower(4, 5);
        assert_eq!(y4.self_intersection(&y4.top_class().unwrap()).unwrap(), q(5));

        let y3 = y_tower(3, 4);
        let l3 = y3.top_class().unwrap();
        let s1 = y3.section(1).unwrap();
        let s2 = y3.section(2).unwrap();
        assert_eq!(y3.intersection_number(&[l3.clone(), l3.clone(), s1]).unwrap(), q(1));
        assert_eq!(y3.intersection_number(&[l3.clone(), l3, s2]).unwrap(), q(0));
    }

    #[test]
    fn level_classes() {
        let w = TowerSpec::from_rows(vec![vec![2], vec![4, 2]]).unwrap();
        assert_eq!(w.level_class(2).unwrap(), DivisorClass::from_ints(&[2, 1, 0]));
        assert_eq!(w.top_class().unwrap(), DivisorClass::from_ints(&[4, 2, 1]));
        assert!(w.level_class(1).is_err());
        assert!(TowerSpec::point_line().top_class().is_err());
    }

    #[test]
    fn certificates() {
        let w = TowerSpec::from_rows(vec![vec![2], vec![4, 2]]).unwrap();
        let neg = DivisorClass::from_ints(&[-1, 0, 0]);
        assert_eq!(w.freeness_certificate(&neg).unwrap(), FreenessCertificate::Unknown);

        let two_h = DivisorClass::from_ints(&[4, 2, 1]);
        let cert = w.freeness_certificate(&two_h).unwrap();
        assert_eq!(cert.decomposition().unwrap(), &[q(0), q(0), q(1)]);

        let t = DivisorClass::from_ints(&[20, 10, 5]);
        let cert = w.freeness_certificate(&t).unwrap();
        assert_eq!(cert.decomposition().unwrap(), &[q(0), q(0), q(5)]);
        assert_eq!(w.from_level_basis(cert.decomposition().unwrap()).unwrap(), t);
    }

    #[test]
    fn multiply_by_class_matches_product() {
        let w = TowerSpec::from_rows(vec![vec![2], vec![4, 2], vec![4, 2, 1]]).unwrap();
        let n = DivisorClass::from_ints(&[2, 1, 1, 1]);
        let curve = w.reduce_indices(&[1, 3, 4], q(1)).unwrap();
        let value = w.degree(&w.multiply(&curve, &n).unwrap());
        let direct = w
            .intersection_number(&[n, w.section(1).unwrap(), w.section(3).unwrap(), w.section(4).unwrap()])
            .unwrap();
        assert_eq!(value, direct);
    }
}
