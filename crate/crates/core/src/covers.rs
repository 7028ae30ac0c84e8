//! The two families of double covers and their invariants.
//!
//! Both families live over the tower `W_k` of dimension `n + k + 1`:
//!
//! * `Y_n` has rows `(e)`, `(e, 1)`, ..., `(e, 1, ..., 1)`;
//! * `W = W_0` adds the row `(2e, 2, ..., 2)`, i.e. it is `P(O + L_n^{-2})`;
//! * `W_l` adds the row `(2e, 2, ..., 2, 1, ..., 1)` ending in `l` ones.
//!
//! The cover `X -> W_k` is branched along a member of `|2B|`, where `B` is the
//! half-branch class below, so `K_X` is the pullback of `N = K_W + B`. The
//! plurigenera of `X` come from `h^0(mN) + h^0(mN - B)` on `W_k`, and the
//! volume is `2 H^d` for the half-integral class
//! `H = N - (Σ_{n+1} + ... + Σ_{n+1+k}) / 2`. `k = 0` is the first family,
//! `k >= 1` the second.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cohomology::{h0, DifferenceTable};
use crate::{DivisorClass, Error, FreenessCertificate, Result, TowerSpec, Q};

fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

fn pow2(k: u32) -> Q {
    Q::from_integer(BigInt::one() << k)
}

/// The base tower `Y_n`: row 1 is `(e)`, row `i` is `(e, 1, ..., 1)`.
pub fn example_tower_y(n: usize, e: i64) -> Result<TowerSpec> {
    if n < 2 || e < 1 {
        return Err(Error::Parameter(format!(
            "base tower needs n >= 2 and e >= 1, got n = {n}, e = {e}"
        )));
    }
    TowerSpec::from_rows(y_rows(n, e))
}

fn y_rows(n: usize, e: i64) -> Vec<Vec<i64>> {
    (1..n)
        .map(|i| {
            let mut row = vec![1; i];
            row[0] = e;
            row
        })
        .collect()
}

/// `W_k`: `Y_n` followed by `(2e, 2, ..., 2)` and `k` rows
/// `(2e, 2, ..., 2, 1, ..., 1)` with `l` trailing ones in row `n + l`.
pub fn example_tower_w(n: usize, e: i64, k: usize) -> Result<TowerSpec> {
    if n < 2 || e < 1 {
        return Err(Error::Parameter(format!(
            "tower W needs n >= 2 and e >= 1, got n = {n}, e = {e}"
        )));
    }
    let mut rows = y_rows(n, e);
    for l in 0..=k {
        let len = n + l;
        let mut row = vec![2; len];
        row[0] = 2 * e;
        for slot in row.iter_mut().skip(len - l) {
            *slot = 1;
        }
        rows.push(row);
    }
    TowerSpec::from_rows(rows)
}

/// A double cover of `W_k` together with its named divisor classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    pub n: usize,
    pub e: i64,
    pub k: usize,
    pub tower: TowerSpec,
    /// `B`: the branch divisor is a member of `|2B|`.
    pub half_branch: DivisorClass,
    /// `N = K_W + B`, so `K_X = τ^* N`.
    pub canonical: DivisorClass,
    /// `T`: the free part of the branch, `2B = T + Σ_{n+1} (+ Σ_{n+1+k})`.
    pub free_branch: DivisorClass,
    /// `H = N - (1/2) Σ_{j=0}^{k} Σ_{n+1+j}`.
    pub reduced_canonical: DivisorClass,
    /// `Σ_{n+1}, ..., Σ_{n+1+k}`.
    pub sigma_top: Vec<DivisorClass>,
}

/// Builds the cover data for `(n, e, k)`, asserting all defining identities.
pub fn cover_spec(n: usize, e: i64, k: usize) -> Result<CoverSpec> {
    if n < 2 {
        return Err(Error::Parameter(format!("cover needs n >= 2, got {n}")));
    }
    if e < 2 {
        return Err(Error::Parameter(format!("cover needs e >= 2, got {e}")));
    }
    let tower = example_tower_w(n, e, k)?;
    let d = tower.dim();
    let (ni, ki) = (n as i64, k as i64);

    // Coordinates: leading multiple of e, a run of n - 1 entries, then the tail.
    let mut b = vec![(ni + 2 * ki + 3) * e];
    b.extend((0..ni - 1).map(|j| 2 * ki + ni + 3 - j));
    b.push(ki + 3);
    b.extend((0..ki).map(|j| ki + 2 - j));

    let mut t = vec![(2 * ni + 4 * ki + 6) * e];
    t.extend((0..ni - 1).map(|j| 2 * ni + 4 * ki + 6 - 2 * j));
    if k == 0 {
        t.push(5);
    } else {
        t.push(2 * ki + 5);
        t.extend((0..ki - 1).map(|j| 2 * ki + 4 - 2 * j));
        t.push(5);
    }

    let mut n_display = vec![2 * e - 2];
    n_display.extend(std::iter::repeat_n(1, d - 1));

    let half_branch = DivisorClass::from_ints(&b);
    let free_branch = DivisorClass::from_ints(&t);
    let canonical = DivisorClass::from_ints(&n_display);
    let sigma_top: Vec<DivisorClass> = (n + 1..=d).map(|i| DivisorClass::basis(d, i)).collect();
    let mut reduced_canonical = canonical.clone();
    let half = Q::new(1.into(), 2.into());
    for s in &sigma_top {
        reduced_canonical = &reduced_canonical - &s.scale(&half);
    }

    let cover = CoverSpec {
        n,
        e,
        k,
        tower,
        half_branch,
        canonical,
        free_branch,
        reduced_canonical,
        sigma_top,
    };
    if let Some(failed) = cover.structural_checks().into_iter().find(|c| !c.passed) {
        return Err(Error::Inconsistent(failed.to_string()));
    }
    Ok(cover)
}

impl CoverSpec {
    pub fn dim(&self) -> usize {
        self.tower.dim()
    }

    /// The sections appearing in the branch divisor besides `T`.
    fn branch_sections(&self) -> DivisorClass {
        let d = self.dim();
        let mut out = DivisorClass::basis(d, self.n + 1);
        if self.k >= 1 {
            out += &DivisorClass::basis(d, d);
        }
        out
    }

    /// `Y_n`.
    pub fn base_tower(&self) -> TowerSpec {
        self.tower.truncate(self.n).expect("n <= dim")
    }

    /// `N_n = (2e - 2, 1, ..., 1)` on `Y_n`.
    pub fn base_canonical(&self) -> DivisorClass {
        let mut coords = vec![2 * self.e - 2];
        coords.extend(std::iter::repeat_n(1, self.n - 1));
        DivisorClass::from_ints(&coords)
    }

    /// `L_n = (e, 1, ..., 1)` on `Y_n`.
    pub fn base_polarization(&self) -> DivisorClass {
        let mut coords = vec![self.e];
        coords.extend(std::iter::repeat_n(1, self.n - 1));
        DivisorClass::from_ints(&coords)
    }

    fn structural_checks(&self) -> Vec<IdentityCheck> {
        let d = self.dim();
        let mut checks = Vec::new();

        let two_b = self.half_branch.scale_int(2);
        let rhs = &self.free_branch + &self.branch_sections();
        checks.push(IdentityCheck::equal("2B = T + branch sections", &rhs, &two_b));

        let adj = &self.tower.canonical_class() + &self.half_branch;
        checks.push(IdentityCheck::equal("N = K_W + B", &adj, &self.canonical));

        let mut display = vec![2 * self.e - 2];
        display.extend(std::iter::repeat_n(1, d - 1));
        checks.push(IdentityCheck::equal(
            "N = (2e-2, 1, ..., 1)",
            &DivisorClass::from_ints(&display),
            &self.canonical,
        ));

        let two_h = self.reduced_canonical.scale_int(2);
        let top = self.tower.top_class().expect("dim >= 3");
        let rhs = &DivisorClass::basis(d, 1).scale_int(2 * self.e - 4) + &top;
        checks.push(IdentityCheck::equal("2H = (2e-4) S1 + L_top", &rhs, &two_h));
        checks
    }
}

/// One named identity with its expected and observed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl IdentityCheck {
    pub fn equal<T: PartialEq + fmt::Display>(name: &str, expected: &T, actual: &T) -> Self {
        IdentityCheck {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed: expected == actual,
        }
    }

    pub fn holds(name: &str, expected: &str, actual: String, passed: bool) -> Self {
        IdentityCheck {
            name: name.to_string(),
            expected: expected.to_string(),
            actual,
            passed,
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {status} (expected {}, actual {})",
            self.name, self.expected, self.actual
        )
    }
}

/// A computed value and the checks run while computing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verified<T> {
    pub value: T,
    pub checks: Vec<IdentityCheck>,
}

impl<T> Verified<T> {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Closed forms the computed invariants are compared against. Swapping one
/// out lets tests confirm that a wrong formula is caught.
#[derive(Clone, Copy, Debug)]
pub struct ClosedForms {
    /// `p_g = (n + 1) e - n`.
    pub geometric_genus: fn(usize, i64) -> BigInt,
    /// `Vol = (n + k + 2) e / 2^k - (n + k + 1) / 2^(k - 1)`.
    pub volume: fn(usize, i64, usize) -> Q,
    /// `(a, b)` with `Vol = a p_g - b`.
    pub slope: fn(usize, usize) -> (Q, Q),
}

impl Default for ClosedForms {
    fn default() -> Self {
        ClosedForms {
            geometric_genus: geometric_genus_formula,
            volume: volume_formula,
            slope: slope_coefficients,
        }
    }
}

pub fn geometric_genus_formula(n: usize, e: i64) -> BigInt {
    BigInt::from((n as i64 + 1) * e - n as i64)
}

pub fn volume_formula(n: usize, e: i64, k: usize) -> Q {
    let (n, k32) = (n as i64, k as u32);
    // (n+k+1)/2^(k-1) written as 2(n+k+1)/2^k so k = 0 needs no special case
    (q((n + k as i64 + 2) * e) - q(2 * (n + k as i64 + 1))) / pow2(k32)
}

/// Second-family slope `((n+k+2), (n^2+2n+2) + (n+2)k) / (2^k (n+1))`.
/// At `k = 0` this agrees with [`first_family_slope`] at `m = n + 1`.
pub fn slope_coefficients(n: usize, k: usize) -> (Q, Q) {
    let (n, ki) = (n as i64, k as i64);
    let denom = pow2(k as u32) * q(n + 1);
    let a = q(n + ki + 2) / &denom;
    let b = q(n * n + 2 * n + 2 + (n + 2) * ki) / &denom;
    (a, b)
}

/// First-family slope indexed by the dimension `m` of the cover:
/// `((m + 1) / m, (m^2 + 1) / m)`.
pub fn first_family_slope(m: usize) -> (Q, Q) {
    let m = m as i64;
    (Q::new((m + 1).into(), m.into()), Q::new((m * m + 1).into(), m.into()))
}

/// `P_m = h^0(W, mN) + h^0(W, mN - B)`.
pub fn plurigenus(cover: &CoverSpec, m: u32) -> Result<u128> {
    if m == 0 {
        return Err(Error::Parameter("plurigenus needs m >= 1".into()));
    }
    let m_n = cover.canonical.scale_int(m as i64);
    let twisted = &m_n - &cover.half_branch;
    Ok(h0(&cover.tower, &m_n)? + h0(&cover.tower, &twisted)?)
}

pub fn geometric_genus(cover: &CoverSpec) -> Result<Verified<u128>> {
    geometric_genus_with(cover, &ClosedForms::default())
}

pub fn geometric_genus_with(cover: &CoverSpec, forms: &ClosedForms) -> Result<Verified<u128>> {
    let value = plurigenus(cover, 1)?;
    let on_w = h0(&cover.tower, &cover.canonical)?;
    let on_base = h0(&cover.base_tower(), &cover.base_canonical())?;
    let second = h0(&cover.tower, &(&cover.canonical - &cover.half_branch))?;
    let formula = (forms.geometric_genus)(cover.n, cover.e);
    let checks = vec![
        IdentityCheck::equal("p_g = (n+1)e - n", &formula, &BigInt::from(value)),
        IdentityCheck::equal("h0(W_k, N) = h0(Y_n, N_n)", &on_base, &on_w),
        IdentityCheck::equal("h0(W_k, N - B) = 0", &0u128, &second),
    ];
    Ok(Verified { value, checks })
}

/// `Vol = 2 H^d`, checked against the closed form.
pub fn volume_closed_form(cover: &CoverSpec) -> Result<Verified<Q>> {
    volume_closed_form_with(cover, &ClosedForms::default())
}

pub fn volume_closed_form_with(cover: &CoverSpec, forms: &ClosedForms) -> Result<Verified<Q>> {
    let value = cover.tower.self_intersection(&cover.reduced_canonical)? * q(2);
    let formula = (forms.volume)(cover.n, cover.e, cover.k);
    let checks = vec![IdentityCheck::equal("Vol = 2 H^d closed form", &formula, &value)];
    Ok(Verified { value, checks })
}

/// Volume read off the growth of even plurigenera.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluriVolume {
    /// Differences of `t -> P_{2t}`.
    pub table: DifferenceTable,
    /// Top difference divided by `2^d`, when stabilized.
    pub implied_volume: Option<Q>,
}

/// Samples `P_{2t}` for `t = 1 ..= t_max`; the stabilized `d`-th difference
/// equals `Vol · 2^d`.
pub fn volume_via_plurigenera(cover: &CoverSpec, t_max: u32) -> Result<PluriVolume> {
    let d = cover.dim();
    if (t_max as usize) < d + 2 {
        return Err(Error::Parameter(format!(
            "t_max = {t_max} too small for dimension {d}; need at least {}",
            d + 2
        )));
    }
    let samples = (1..=t_max)
        .map(|t| Ok((t as i64, BigInt::from(plurigenus(cover, 2 * t)?))))
        .collect::<Result<Vec<_>>>()?;
    let table = DifferenceTable::from_samples(samples, d);
    let implied_volume = table.leading.as_ref().map(|l| l / pow2(d as u32));
    Ok(PluriVolume {
        table,
        implied_volume,
    })
}

/// `h^0(mN) == h^0(mH)` for even `m`.
pub fn h0_even_parity_check(cover: &CoverSpec, m: u32) -> Result<bool> {
    if !m.is_multiple_of(2) {
        return Err(Error::Parameter(format!("m must be even, got {m}")));
    }
    let full = h0(&cover.tower, &cover.canonical.scale_int(m as i64))?;
    let reduced = h0(&cover.tower, &cover.reduced_canonical.scale_int(m as i64))?;
    Ok(full == reduced)
}

/// The nested lattice sum
///
/// ```text
/// Σ_{i_k=0}^{M} Σ_{i_{k-1}=0}^{M-i_k} ... Σ_{i_1=0}^{M-(i_k+...+i_2)}
///     Σ_{l=i_k+...+i_1}^{M} h^0(Y_n, m N_n - 2 l L_n)
/// ```
///
/// with `M = m` or, when `use_half`, `M = m / 2`. It equals `h^0(W_k, mN)`
/// for `M = m` and `h^0(W_k, mH)` for `M = m / 2`.
pub fn nested_sum_h0(cover: &CoverSpec, m: u32, use_half: bool) -> Result<u128> {
    if cover.k == 0 {
        return Err(Error::Parameter("nested sum needs k >= 1".into()));
    }
    if use_half && !m.is_multiple_of(2) {
        return Err(Error::Parameter(format!("half bound needs even m, got {m}")));
    }
    let bound = if use_half { m / 2 } else { m } as usize;
    let base = cover.base_tower();
    let n_n = cover.base_canonical().scale_int(m as i64);
    let l_n = cover.base_polarization();

    // tail[s] = Σ_{l=s}^{M} h^0(Y_n, mN_n - 2l L_n)
    let mut tail = vec![0u128; bound + 2];
    for l in (0..=bound).rev() {
        let class = &n_n - &l_n.scale_int(2 * l as i64);
        tail[l] = tail[l + 1] + h0(&base, &class)?;
    }
    Ok(nested(cover.k, 0, bound, &tail))
}

// Sums over `levels` more indices, each bounded by `bound - partial`.
fn nested(levels: usize, partial: usize, bound: usize, tail: &[u128]) -> u128 {
    if levels == 0 {
        return tail[partial];
    }
    (0..=bound - partial)
        .map(|i| nested(levels - 1, partial + i, bound, tail))
        .sum()
}

/// The cycle `Σ_1 ··· Σ_{n-1} · Σ_{n+1} ··· Σ_{n+1+k}`: a fibre of
/// `Y_n -> Y_{n-1}` placed inside all the top sections.
pub fn fibre_in_sections(cover: &CoverSpec) -> Vec<usize> {
    (1..cover.n).chain(cover.n + 1..=cover.dim()).collect()
}

/// `N · C` for the curve of [`fibre_in_sections`]; negative when `k >= 1`.
pub fn non_nef_witness(cover: &CoverSpec) -> Result<Q> {
    if cover.k == 0 {
        return Err(Error::Parameter("non-nef witness needs k >= 1".into()));
    }
    fibre_degree(cover, &cover.canonical)
}

/// Degree of `class` on the curve of [`fibre_in_sections`], for any `k`.
pub fn fibre_degree(cover: &CoverSpec, class: &DivisorClass) -> Result<Q> {
    let curve = cover.tower.reduce_indices(&fibre_in_sections(cover), Q::one())?;
    let zero_cycle = cover.tower.multiply(&curve, class)?;
    Ok(cover.tower.degree(&zero_cycle))
}

/// Everything reported for one cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub e: i64,
    pub k: usize,
    /// Dimension of the cover, `n + k + 1`. For `k = 0` this is the index
    /// used by the first-family slope formula.
    pub dim: usize,
    pub p_g: u128,
    pub plurigenera: Vec<(u32, u128)>,
    pub volume: Q,
    pub slope_a: Q,
    pub slope_b: Q,
    /// Dimension of the canonical image; the base `Y_n` has dimension `n`.
    pub d1: usize,
    /// Δ-genus of `(Y_n, L_n)`.
    pub delta_genus_of_ln: BigInt,
    pub identity_checks: Vec<IdentityCheck>,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.identity_checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.identity_checks.iter().filter(|c| !c.passed)
    }
}

pub fn slope_report(cover: &CoverSpec, pluri_max: u32) -> Result<InvariantReport> {
    slope_report_with(cover, pluri_max, &ClosedForms::default())
}

pub fn slope_report_with(
    cover: &CoverSpec,
    pluri_max: u32,
    forms: &ClosedForms,
) -> Result<InvariantReport> {
    let (n, e, k) = (cover.n, cover.e, cover.k);
    let d = cover.dim();
    let tower = &cover.tower;
    let mut checks = cover.structural_checks();

    let genus = geometric_genus_with(cover, forms)?;
    let p_g = genus.value;
    checks.extend(genus.checks);

    let volume = volume_closed_form_with(cover, forms)?;
    checks.extend(volume.checks);
    let volume = volume.value;

    let (slope_a, slope_b) = (forms.slope)(n, k);
    let predicted = &slope_a * Q::from_integer(BigInt::from(p_g)) - &slope_b;
    checks.push(IdentityCheck::equal("Vol = a p_g - b", &predicted, &volume));
    if k == 0 {
        let (a, b) = first_family_slope(d);
        checks.push(IdentityCheck::holds(
            "slope = ((m+1)/m, (m^2+1)/m), m = dim X",
            &format!("({a}, {b})"),
            format!("({slope_a}, {slope_b})"),
            a == slope_a && b == slope_b,
        ));
    }

    // free-cone certificates
    for (name, class) in [
        ("T certified free", &cover.free_branch),
        ("2H certified free", &cover.reduced_canonical.scale_int(2)),
    ] {
        let cert = tower.freeness_certificate(class)?;
        let actual = match &cert {
            FreenessCertificate::Certified(c) => format!("certified {}", DivisorClass::new(c.clone())),
            FreenessCertificate::Unknown => "unknown".to_string(),
        };
        checks.push(IdentityCheck::holds(name, "certified", actual, cert.is_certified()));
    }
    let t_formula = free_branch_in_level_basis(cover)?;
    checks.push(IdentityCheck::equal(
        "T in level basis",
        &t_formula,
        &cover.free_branch,
    ));

    // intersection numbers of the top polarization
    let top = tower.top_class()?;
    let mut powers = vec![top.clone(); d - 1];
    let top_d = tower.self_intersection(&top)?;
    checks.push(IdentityCheck::equal(
        "L_top^d = 2^n e",
        &(pow2(n as u32) * q(e)),
        &top_d,
    ));
    powers.push(tower.section(1)?);
    let with_s1 = tower.intersection_number(&powers)?;
    checks.push(IdentityCheck::equal(
        "L_top^(d-1) S1 = 2^(n-1)",
        &pow2(n as u32 - 1),
        &with_s1,
    ));
    powers[d - 1] = tower.section(d)?;
    let with_sd = tower.intersection_number(&powers)?;
    checks.push(IdentityCheck::equal("L_top^(d-1) S_d = 0", &Q::zero(), &with_sd));

    if k >= 1 {
        let witness = non_nef_witness(cover)?;
        checks.push(IdentityCheck::holds(
            "N . C < 0 (not nef)",
            "< 0",
            witness.to_string(),
            witness.is_negative(),
        ));
    }

    let base = cover.base_tower();
    let delta_genus_of_ln = crate::cohomology::delta_genus(&base, &cover.base_polarization())?;
    checks.push(IdentityCheck::equal(
        "delta(Y_n, L_n) = 0",
        &BigInt::zero(),
        &delta_genus_of_ln,
    ));

    let plurigenera = (1..=pluri_max)
        .map(|m| plurigenus(cover, m).map(|p| (m, p)))
        .collect::<Result<Vec<_>>>()?;

    Ok(InvariantReport {
        n,
        e,
        k,
        dim: d,
        p_g,
        plurigenera,
        volume,
        slope_a,
        slope_b,
        d1: n,
        delta_genus_of_ln,
        identity_checks: checks,
    })
}

/// `T` as a combination of level classes `L_i' = level_class(i)`:
///
/// * `k = 0`: `5 L_{n+1} + 2 Σ_{i=2}^{n-1} L_i`
/// * `k = 1`: `2 Σ_{i=2}^{n-1} L_i + 2 L_{n+1} + 5 L_{n+2}`
/// * `k >= 2`: `2 Σ_{i=2}^{n-1} L_i + L_{n+1} + 2 Σ_{i=n+2}^{n+k-1} L_i + 3 L_{n+k} + 5 L_{n+1+k}`
pub fn free_branch_in_level_basis(cover: &CoverSpec) -> Result<DivisorClass> {
    let (n, k) = (cover.n, cover.k);
    let mut coeffs = vec![0i64; cover.dim() + 1];
    for c in coeffs.iter_mut().take(n).skip(2) {
        *c = 2;
    }
    match k {
        0 => coeffs[n + 1] = 5,
        1 => {
            coeffs[n + 1] = 2;
            coeffs[n + 2] = 5;
        }
        _ => {
            coeffs[n + 1] = 1;
            for c in coeffs.iter_mut().take(n + k).skip(n + 2) {
                *c = 2;
            }
            coeffs[n + k] = 3;
            coeffs[n + k + 1] = 5;
        }
    }
    let mut out = DivisorClass::zero(cover.dim());
    for (i, &c) in coeffs.iter().enumerate().skip(2) {
        if c != 0 {
            out += &cover.tower.level_class(i)?.scale_int(c);
        }
    }
    Ok(out)
}

/// `a(k) = (n + k + 2) / (2^k (n + 1))` for `k = 0 ..= k_max`.
pub fn slope_limit_table(n: usize, k_max: usize) -> Vec<(usize, Q)> {
    (0..=k_max).map(|k| (k, slope_coefficients(n, k).0)).collect()
}
