//! Monotone integer priority queues.
//!
//! All implementations share one usage contract: once a key has been
//! extracted, no key below it may ever be inserted or produced by a
//! decrease. The contract is checked on every operation rather than
//! trusted, so a caller that breaks it gets an error instead of a silently
//! wrong extraction order.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

mod binary_heap;
mod dial;
mod radix;
mod two_level;

pub use binary_heap::BinaryHeapQueue;
pub use dial::DialBucketQueue;
pub use radix::RadixHeap;
pub use two_level::TwoLevelBucketQueue;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueueError {
    #[error("node {0} is already stored")]
    DuplicateId(usize),
    #[error("node {0} is not stored")]
    UnknownId(usize),
    #[error("key {key} is below the last extracted key {last}")]
    MonotonicityViolation { key: u64, last: u64 },
    #[error("new key {new} exceeds current key {current}")]
    KeyIncrease { new: u64, current: u64 },
    #[error("key {key} does not fit the queue's span of {span}")]
    KeyRangeOverflow { key: u64, span: u64 },
    #[error("invalid queue parameter: {0}")]
    InvalidParameter(String),
}

/// Which entry to extract when several share the minimal integer key.
///
/// `MaxHintFirst` picks the entry with the largest tie hint; the adapter
/// supplies the IEEE bit pattern of the float key as the hint, so this is
/// "largest float distance first" — the schedule the zero-edge
/// demonstration needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Fifo,
    Lifo,
    MaxHintFirst,
}

/// Operation counters. Counters only increase; `bucket_scans` counts
/// empty-bucket advances (cursor steps, level scans, redistributions).
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct QueueStats {
    pub inserts: u64,
    pub decrease_keys: u64,
    pub extract_mins: u64,
    pub bucket_scans: u64,
}

/// Integer-keyed min-priority queue with monotone extraction.
///
/// `tie_hint` is a secondary value carried with each entry; it never affects
/// which *key* is extracted next, only which entry wins among equal keys
/// under `TieBreak::MaxHintFirst`.
pub trait MonotoneIntQueue {
    fn insert(&mut self, id: usize, key: u64, tie_hint: u64) -> Result<(), QueueError>;

    fn decrease_key(&mut self, id: usize, new_key: u64, tie_hint: u64) -> Result<(), QueueError>;

    /// Remove and return an entry with minimal stored key, or `None` when
    /// the queue is empty.
    fn extract_min(&mut self) -> Option<(usize, u64)>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn last_extracted(&self) -> Option<u64>;

    fn stats(&self) -> QueueStats;
}

/// One stored entry inside a bucket.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Slot {
    pub id: usize,
    pub key: u64,
    pub seq: u64,
    pub hint: u64,
}

/// Index of the winning slot among `slots` under `policy`. `slots` must be
/// non-empty; all slots are assumed to share the minimal key (bucket queues)
/// or the choice is restricted to minimal-key slots by the caller.
pub(crate) fn pick_slot(slots: &[Slot], policy: TieBreak) -> usize {
    debug_assert!(!slots.is_empty());
    let mut best = 0;
    for (i, s) in slots.iter().enumerate().skip(1) {
        let b = &slots[best];
        let wins = match policy {
            TieBreak::Fifo => s.seq < b.seq,
            TieBreak::Lifo => s.seq > b.seq,
            TieBreak::MaxHintFirst => s.hint > b.hint || (s.hint == b.hint && s.seq < b.seq),
        };
        if wins {
            best = i;
        }
    }
    best
}

/// Per-node bucket positions shared by the bucketed implementations.
/// Maps id -> (bucket index, slot index within the bucket).
pub(crate) type PositionMap = HashMap<usize, (usize, usize)>;

/// Remove slot `pos` from `bucket` by swap, fixing up the displaced
/// entry's position record.
pub(crate) fn remove_slot(
    bucket: &mut Vec<Slot>,
    bucket_idx: usize,
    pos: usize,
    positions: &mut PositionMap,
) -> Slot {
    let slot = bucket.swap_remove(pos);
    if let Some(moved) = bucket.get(pos) {
        positions.insert(moved.id, (bucket_idx, pos));
    }
    positions.remove(&slot.id);
    slot
}

#[cfg(test)]
pub(crate) mod contract_tests {
    //! Contract checks run against every implementation.

    use super::*;

    pub fn insert_extract_sorted(q: &mut dyn MonotoneIntQueue) {
        q.insert(0, 3, 0).unwrap();
        q.insert(1, 1, 0).unwrap();
        q.insert(2, 2, 0).unwrap();
        let keys: Vec<u64> = std::iter::from_fn(|| q.extract_min()).map(|(_, k)| k).collect();
        assert_eq!(keys, vec![1, 2, 3]);
    }

    pub fn duplicate_id_rejected(q: &mut dyn MonotoneIntQueue) {
        q.insert(7, 5, 0).unwrap();
        assert_eq!(q.insert(7, 6, 0), Err(QueueError::DuplicateId(7)));
    }

    pub fn monotonicity_enforced(q: &mut dyn MonotoneIntQueue) {
        q.insert(0, 5, 0).unwrap();
        assert_eq!(q.extract_min(), Some((0, 5)));
        assert_eq!(
            q.insert(1, 4, 0),
            Err(QueueError::MonotonicityViolation { key: 4, last: 5 })
        );
        // equal to the last extraction is fine
        q.insert(1, 5, 0).unwrap();
    }

    pub fn decrease_key_basics(q: &mut dyn MonotoneIntQueue) {
        q.insert(0, 9, 0).unwrap();
        q.insert(1, 6, 0).unwrap();
        q.decrease_key(0, 4, 0).unwrap();
        assert_eq!(q.extract_min(), Some((0, 4)));
        assert_eq!(
            q.decrease_key(1, 7, 0),
            Err(QueueError::KeyIncrease { new: 7, current: 6 })
        );
        assert_eq!(q.decrease_key(5, 6, 0), Err(QueueError::UnknownId(5)));
    }

    pub fn ties_any_id(q: &mut dyn MonotoneIntQueue) {
        q.insert(0, 7, 0).unwrap();
        q.insert(1, 7, 0).unwrap();
        q.insert(2, 9, 0).unwrap();
        let (_, k1) = q.extract_min().unwrap();
        let (_, k2) = q.extract_min().unwrap();
        let (_, k3) = q.extract_min().unwrap();
        assert_eq!((k1, k2, k3), (7, 7, 9));
    }

    pub fn empty_extract(q: &mut dyn MonotoneIntQueue) {
        assert_eq!(q.extract_min(), None);
        assert!(q.is_empty());
    }

    pub fn run_all(make: impl Fn() -> Box<dyn MonotoneIntQueue>) {
        insert_extract_sorted(make().as_mut());
        duplicate_id_rejected(make().as_mut());
        monotonicity_enforced(make().as_mut());
        decrease_key_basics(make().as_mut());
        ties_any_id(make().as_mut());
        empty_extract(make().as_mut());
    }
}
