//! Float-keyed facade over a monotone integer queue.
//!
//! Each stored node carries its float key `D` and a companion integer key
//! `floor(D / delta)`; the inner queue only ever sees the integer key, so
//! extraction order is decided by integer buckets. The extracted float
//! keys may decrease over time, but never by `delta` or more below the
//! running minimum, which is exactly the slack Dijkstra tolerates on
//! strictly positive graphs.

use std::collections::HashMap;

use thiserror::Error;

use crate::queue::{MonotoneIntQueue, QueueError};

#[derive(Debug, Error, PartialEq)]
pub enum AdapterError {
    #[error("delta must be strictly positive, got {0}")]
    NonPositiveDelta(f64),
    #[error("float key must be finite and non-negative, got {0}")]
    InvalidFloatKey(f64),
    #[error("key {key} / delta {delta} does not fit in 63 bits")]
    KeyRangeOverflow { key: f64, delta: f64 },
    #[error("new float key {new} is not below the current key {current}")]
    FloatKeyIncrease { new: f64, current: f64 },
    #[error(transparent)]
    Queue(#[from] QueueError),
}

/// floor(d / delta), computed as float division then truncation toward
/// zero. Both are equal here because d >= 0.
pub fn int_key(d: f64, delta: f64) -> Result<u64, AdapterError> {
    if !(delta > 0.0) {
        return Err(AdapterError::NonPositiveDelta(delta));
    }
    if !d.is_finite() || d < 0.0 {
        return Err(AdapterError::InvalidFloatKey(d));
    }
    let q = d / delta;
    if q >= 9_223_372_036_854_775_808.0 {
        return Err(AdapterError::KeyRangeOverflow { key: d, delta });
    }
    Ok(q as u64)
}

pub struct DeltaAdapter {
    inner: Box<dyn MonotoneIntQueue>,
    delta: f64,
    float_keys: HashMap<usize, f64>,
}

impl DeltaAdapter {
    /// `delta = 0` is refused outright: with zero granularity the integer
    /// keys collapse and no partial ordering exists.
    pub fn new(inner: Box<dyn MonotoneIntQueue>, delta: f64) -> Result<Self, AdapterError> {
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(AdapterError::NonPositiveDelta(delta));
        }
        Ok(DeltaAdapter {
            inner,
            delta,
            float_keys: HashMap::new(),
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn len(&self) -> usize {
        self.float_keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.float_keys.is_empty()
    }

    pub fn inner(&self) -> &dyn MonotoneIntQueue {
        self.inner.as_ref()
    }

    /// Insert `id` at float key `d`, or lower its key to `d`. When the
    /// integer key is unchanged only the float key is rewritten; the inner
    /// queue is untouched because the node's bucket cannot move.
    pub fn update(&mut self, id: usize, d: f64) -> Result<(), AdapterError> {
        let key = int_key(d, self.delta)?;
        // the IEEE bit pattern of a non-negative float orders like the
        // float itself, so it doubles as the tie hint
        let hint = d.to_bits();
        match self.float_keys.get(&id) {
            None => {
                self.inner.insert(id, key, hint)?;
            }
            Some(&current) => {
                if d >= current {
                    return Err(AdapterError::FloatKeyIncrease { new: d, current });
                }
                let current_key = int_key(current, self.delta)?;
                if key != current_key {
                    self.inner.decrease_key(id, key, hint)?;
                }
            }
        }
        self.float_keys.insert(id, d);
        debug_assert!({
            let gap = d - self.delta * key as f64;
            (0.0..self.delta).contains(&gap) || key == u64::MAX
        });
        Ok(())
    }

    /// Remove and return a node whose float key is within `delta` of the
    /// minimum stored float key.
    pub fn extract(&mut self) -> Option<(usize, f64)> {
        let (id, _key) = self.inner.extract_min()?;
        let d = self
            .float_keys
            .remove(&id)
            .expect("inner queue returned an id the adapter does not hold");
        Some((id, d))
    }

    /// Current float key of a stored node.
    pub fn float_key(&self, id: usize) -> Option<f64> {
        self.float_keys.get(&id).copied()
    }
}
