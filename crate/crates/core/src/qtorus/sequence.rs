use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use thiserror::Error;

use crate::poly::TPoly;
use crate::scalar::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("sequence {name} at index {index}: {msg}")]
pub struct SequenceError {
    pub name: String,
    pub index: i64,
    pub msg: String,
}

type Producer<C> = dyn Fn(i64) -> Result<TPoly<C>, String> + Send + Sync;

/// A function ℤ → ℤ[t^{±1}] with memoised values.
///
/// When flagged odd (colored Jones convention) only positive indices reach the
/// producer: `f(0) = 0` and `f(−n) = −f(n)`.
#[derive(Clone)]
pub struct LaurentSequence<C> {
    name: String,
    odd: bool,
    producer: Arc<Producer<C>>,
    cache: Arc<RwLock<HashMap<i64, Arc<TPoly<C>>>>>,
}

impl<C: Ring + 'static> LaurentSequence<C> {
    pub fn new(
        name: impl Into<String>,
        producer: impl Fn(i64) -> Result<TPoly<C>, String> + Send + Sync + 'static,
    ) -> Self {
        LaurentSequence { name: name.into(), odd: false, producer: Arc::new(producer), cache: Arc::default() }
    }

    /// A sequence obeying the colored Jones oddness convention.
    pub fn odd(
        name: impl Into<String>,
        producer: impl Fn(i64) -> Result<TPoly<C>, String> + Send + Sync + 'static,
    ) -> Self {
        LaurentSequence { odd: true, ..Self::new(name, producer) }
    }

    /// Values known only at the listed indices.
    pub fn from_values(name: impl Into<String>, values: impl IntoIterator<Item = (i64, TPoly<C>)>) -> Self {
        let table: HashMap<i64, TPoly<C>> = values.into_iter().collect();
        Self::new(name, move |n| table.get(&n).cloned().ok_or_else(|| "no value supplied".to_string()))
    }

    pub fn constant(c: TPoly<C>) -> Self {
        Self::new("const", move |_| Ok(c.clone()))
    }

    /// Quantum integers `[n] = (t^{2n} − t^{−2n}) / (t² − t^{−2})`, the
    /// colored Jones function of the unknot.
    pub fn quantum_integer() -> Self {
        Self::odd("unknot", |n| Ok(quantum_integer(n)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn get(&self, n: i64) -> Result<Arc<TPoly<C>>, SequenceError> {
        if self.odd {
            if n == 0 {
                return Ok(Arc::new(TPoly::zero()));
            }
            if n < 0 {
                return Ok(Arc::new(-(*self.get(-n)?).clone()));
            }
        }
        if let Some(v) = self.cache.read().unwrap().get(&n) {
            return Ok(v.clone());
        }
        let v = (self.producer)(n).map_err(|msg| SequenceError { name: self.name.clone(), index: n, msg })?;
        let v = Arc::new(v);
        self.cache.write().unwrap().entry(n).or_insert_with(|| v.clone());
        Ok(v)
    }

    /// Evaluate a batch of indices in parallel and populate the cache.
    pub fn prefetch(&self, indices: impl IntoIterator<Item = i64>) -> Result<(), SequenceError> {
        let todo: Vec<i64> = {
            let cache = self.cache.read().unwrap();
            indices.into_iter().filter(|&n| !(self.odd && n <= 0) && !cache.contains_key(&n)).collect()
        };
        todo.par_iter().try_for_each(|&n| self.get(n).map(|_| ()))
    }

    /// `g(n) = f(a·n + b)`; the result carries no oddness flag.
    pub fn reindex(&self, a: i64, b: i64) -> Self {
        let base = self.clone();
        Self::new(format!("{}[{a}n+{b}]", self.name), move |n| {
            base.get(a * n + b).map(|v| (*v).clone()).map_err(|e| e.msg)
        })
    }

    /// `n ↦ f(n) + δ_{n,at}·delta`, for negative controls.
    pub fn perturbed(&self, at: i64, delta: TPoly<C>) -> Self {
        let base = self.clone();
        Self::new(format!("{}~", self.name), move |n| {
            let v = (*base.get(n).map_err(|e| e.msg)?).clone();
            Ok(if n == at { v + delta.clone() } else { v })
        })
    }
}

impl<C> fmt::Debug for LaurentSequence<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LaurentSequence").field("name", &self.name).field("odd", &self.odd).finish()
    }
}

/// `[n] = Σ_{j=0}^{|n|-1} t^{2|n| − 2 − 4j}`, with sign for negative `n`.
pub fn quantum_integer<C: Ring>(n: i64) -> TPoly<C> {
    let m = n.abs();
    let p = TPoly::from_terms((0..m).map(|j| (2 * m - 2 - 4 * j, C::one())));
    if n < 0 {
        -p
    } else {
        p
    }
}
