//! Hypersurfaces in weighted projective space and products with curves.
//!
//! For a general quasi-smooth hypersurface `X_δ ⊂ P(w_0, ..., w_N)` the
//! canonical sheaf is `O(α)` with `α = δ - Σ w_i`. Then `p_g` counts
//! monomials of weighted degree `α` and `Vol = α^{N-1} δ / Π w_i`.
//! Quasi-smoothness is assumed, never checked.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::{Error, Result, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHypersurface {
    weights: Vec<u64>,
    degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceInvariants {
    pub p_g: u128,
    pub volume: Q,
    pub dim: usize,
    /// `δ - Σ w_i`; the canonical class is `O(α)`.
    pub alpha: i64,
    /// `α > 0`. When false the volume is reported as 0.
    pub general_type: bool,
}

impl WeightedHypersurface {
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::Parameter("need at least two weights".into()));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Parameter(format!("weight {pos} is not positive")));
        }
        if degree == 0 {
            return Err(Error::Parameter("degree must be positive".into()));
        }
        Ok(WeightedHypersurface { weights, degree })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.weights.len() - 2
    }

    pub fn alpha(&self) -> i64 {
        self.degree as i64 - self.weights.iter().sum::<u64>() as i64
    }
}

/// Number of monomials `x_0^{a_0} ··· x_N^{a_N}` with `Σ a_i w_i = target`.
pub fn count_monomials(weights: &[u64], target: i64) -> u128 {
    if target < 0 {
        return 0;
    }
    let target = target as usize;
    let mut ways = vec![0u128; target + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for s in w..=target {
            ways[s] += ways[s - w];
        }
    }
    ways[target]
}

pub fn wh_invariants(x: &WeightedHypersurface) -> HypersurfaceInvariants {
    let alpha = x.alpha();
    let dim = x.dim();
    let p_g = count_monomials(&x.weights, alpha);
    let general_type = alpha > 0;
    let volume = if general_type {
        let product: BigInt = x.weights.iter().map(|&w| BigInt::from(w)).product();
        let numer = BigInt::from(alpha).pow(dim as u32) * BigInt::from(x.degree);
        Q::new(numer, product)
    } else {
        Q::zero()
    };
    HypersurfaceInvariants {
        p_g,
        volume,
        dim,
        alpha,
        general_type,
    }
}

/// `Z = X × C` with `g(C) = g >= 2`: `Vol(Z) = (dim X + 1) Vol(X) (2g - 2)`,
/// `p_g(Z) = p_g(X) g`.
pub fn product_with_curve(p_g_x: u128, vol_x: &Q, dim_x: usize, g: u64) -> Result<(u128, Q)> {
    if g < 2 {
        return Err(Error::Parameter(format!("curve genus must be >= 2, got {g}")));
    }
    let factor = BigInt::from(dim_x as u64 + 1) * BigInt::from(2 * g - 2);
    Ok((p_g_x * g as u128, vol_x * Q::from_integer(factor)))
}
