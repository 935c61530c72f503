//! Structure constants of the rescaled basis.
//!
//! `Tt_y Tt_z = sum_{z'} c_{y,z}^{z'} Tt_{z'}` with every `c_{y,z}^{z'}` a
//! polynomial in `delta = v - v^-1` with non-negative integer coefficients.
//! The constants satisfy a recursion on the length of `y`: writing
//! `y = s y'` with `s` the smallest left descent of `y`,
//!
//! ```text
//! c_{y,z}^{z'} = c_{y',z}^{s z'} + (v - v^-1) d c_{y',z}^{z'},
//!     d = 1 if |s z'| < |z'|, d = 0 otherwise,
//! ```
//!
//! with base case `c_{1,z}^{z'} = [z = z']`. The memo table is bounded; a
//! sweep that outgrows the bound fails fast instead of thrashing.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cartan::WeylGroup;
use crate::error::{Error, Result};
use crate::rings::LaurentPoly;

/// Default cap on memoized entries (fits comfortably in memory at desk
/// scale; rank <= 4 sweeps stay well below it).
pub const DEFAULT_CACHE_LIMIT: usize = 1 << 20;

/// Memoizing evaluator for the structure constants `c_{y,z}^{z'}`.
pub struct StructConstCache {
    group: Arc<WeylGroup>,
    cache: HashMap<(u32, u32, u32), LaurentPoly>,
    limit: usize,
}

impl StructConstCache {
    pub fn new(group: &Arc<WeylGroup>) -> Self {
        StructConstCache::with_limit(group, DEFAULT_CACHE_LIMIT)
    }

    pub fn with_limit(group: &Arc<WeylGroup>, limit: usize) -> Self {
        StructConstCache {
            group: Arc::clone(group),
            cache: HashMap::new(),
            limit,
        }
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    /// `c_{y,z}^{z'}` — the coefficient of `Tt_{z'}` in `Tt_y Tt_z`.
    pub fn get(&mut self, y: u32, z: u32, zp: u32) -> Result<LaurentPoly> {
        if y == 0 {
            return Ok(if z == zp {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        if let Some(hit) = self.cache.get(&(y, z, zp)) {
            return Ok(hit.clone());
        }
        let s = self
            .group
            .smallest_left_descent(y)
            .expect("non-identity element has a descent");
        let yp = self.group.left_mul_gen(s, y);
        let szp = self.group.left_mul_gen(s, zp);
        let mut value = self.get(yp, z, szp)?;
        if self.group.length(szp) < self.group.length(zp) {
            value = value.add(&self.get(yp, z, zp)?.mul(&LaurentPoly::delta()));
        }
        if self.cache.len() >= self.limit {
            return Err(Error::CacheLimitExceeded { limit: self.limit });
        }
        self.cache.insert((y, z, zp), value.clone());
        Ok(value)
    }
}
