//! Radix heap: buckets of exponentially growing key ranges anchored at the
//! last extracted key. Bucket b > 0 holds keys whose highest bit differing
//! from the anchor has index b-1; bucket 0 holds keys equal to the anchor.

use super::{pick_slot, remove_slot, MonotoneIntQueue, PositionMap, QueueError, QueueStats, Slot, TieBreak};

pub struct RadixHeap {
    buckets: Vec<Vec<Slot>>,
    // anchor for bucket indexing; equals the last extracted key once
    // anything has been extracted
    anchor: u64,
    extracted_any: bool,
    positions: PositionMap,
    len: usize,
    seq: u64,
    tie: TieBreak,
    stats: QueueStats,
}

impl RadixHeap {
    /// `span` bounds `key - last_extracted` for every stored key, which
    /// sizes the bucket array at ceil(log2(span+1)) + 2.
    pub fn new(span: u64, tie: TieBreak) -> Result<Self, QueueError> {
        if span >= (1 << 62) {
            return Err(QueueError::KeyRangeOverflow { key: span, span });
        }
        let bits = 64 - span.leading_zeros() as usize;
        let nb = (bits + 2).min(66);
        Ok(RadixHeap {
            buckets: vec![Vec::new(); nb],
            anchor: 0,
            extracted_any: false,
            positions: PositionMap::new(),
            len: 0,
            seq: 0,
            tie,
            stats: QueueStats::default(),
        })
    }

    fn bucket_for(&self, key: u64) -> usize {
        debug_assert!(key >= self.anchor);
        if key == self.anchor {
            0
        } else {
            let highest = 64 - (key ^ self.anchor).leading_zeros() as usize;
            highest.min(self.buckets.len() - 1)
        }
    }

    fn check_monotone(&self, key: u64) -> Result<(), QueueError> {
        if self.extracted_any && key < self.anchor {
            return Err(QueueError::MonotonicityViolation {
                key,
                last: self.anchor,
            });
        }
        Ok(())
    }

    fn place(&mut self, slot: Slot) {
        let b = self.bucket_for(slot.key);
        let id = slot.id;
        self.buckets[b].push(slot);
        self.positions.insert(id, (b, self.buckets[b].len() - 1));
    }

    /// Move the contents of the first nonempty bucket down, re-anchored at
    /// that bucket's minimum key. Afterwards bucket 0 is nonempty.
    fn pull_down(&mut self) {
        if !self.buckets[0].is_empty() {
            return;
        }
        let mut first = None;
        for (i, b) in self.buckets.iter().enumerate() {
            if b.is_empty() {
                self.stats.bucket_scans += 1;
            } else {
                first = Some(i);
                break;
            }
        }
        let first = first.expect("pull_down on empty heap");
        let moved = std::mem::take(&mut self.buckets[first]);
        self.anchor = moved.iter().map(|s| s.key).min().unwrap();
        for slot in moved {
            self.place(slot);
        }
        debug_assert!(!self.buckets[0].is_empty());
    }
}

impl MonotoneIntQueue for RadixHeap {
    fn insert(&mut self, id: usize, key: u64, tie_hint: u64) -> Result<(), QueueError> {
        if self.positions.contains_key(&id) {
            return Err(QueueError::DuplicateId(id));
        }
        self.check_monotone(key)?;
        let seq = self.seq;
        self.seq += 1;
        self.place(Slot {
            id,
            key,
            seq,
            hint: tie_hint,
        });
        self.len += 1;
        self.stats.inserts += 1;
        Ok(())
    }

    fn decrease_key(&mut self, id: usize, new_key: u64, tie_hint: u64) -> Result<(), QueueError> {
        let &(b, pos) = self.positions.get(&id).ok_or(QueueError::UnknownId(id))?;
        let current = self.buckets[b][pos].key;
        if new_key > current {
            return Err(QueueError::KeyIncrease {
                new: new_key,
                current,
            });
        }
        self.check_monotone(new_key)?;
        let mut slot = remove_slot(&mut self.buckets[b], b, pos, &mut self.positions);
        slot.key = new_key;
        slot.hint = tie_hint;
        self.place(slot);
        self.stats.decrease_keys += 1;
        Ok(())
    }

    fn extract_min(&mut self) -> Option<(usize, u64)> {
        if self.len == 0 {
            return None;
        }
        self.pull_down();
        debug_assert!(self.buckets[0].iter().all(|s| s.key == self.anchor));
        let pos = pick_slot(&self.buckets[0], self.tie);
        let slot = remove_slot(&mut self.buckets[0], 0, pos, &mut self.positions);
        self.len -= 1;
        self.extracted_any = true;
        self.anchor = slot.key;
        self.stats.extract_mins += 1;
        Some((slot.id, slot.key))
    }

    fn len(&self) -> usize {
        self.len
    }

    fn last_extracted(&self) -> Option<u64> {
        self.extracted_any.then_some(self.anchor)
    }

    fn stats(&self) -> QueueStats {
        self.stats
    }
}
