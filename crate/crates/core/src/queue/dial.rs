//! Dial's bucket queue: a circular array of unit-width buckets, one per
//! key value in the live window, with a cursor that only moves forward.

use super::{pick_slot, remove_slot, MonotoneIntQueue, PositionMap, QueueError, QueueStats, Slot, TieBreak};

pub struct DialBucketQueue {
    buckets: Vec<Vec<Slot>>,
    span: u64,
    // absolute key the cursor is currently parked at; bucket index is
    // cursor_key % buckets.len()
    cursor_key: u64,
    last_extracted: Option<u64>,
    positions: PositionMap,
    len: usize,
    seq: u64,
    tie: TieBreak,
    stats: QueueStats,
}

impl DialBucketQueue {
    /// `span` is the maximum width of the live key window: at any time all
    /// stored keys lie in `[last_extracted, last_extracted + span]`. The
    /// circular array has `span + 1` buckets.
    pub fn new(span: u64, tie: TieBreak) -> Result<Self, QueueError> {
        if span >= (1 << 62) {
            return Err(QueueError::KeyRangeOverflow { key: span, span });
        }
        let size = usize::try_from(span + 1)
            .map_err(|_| QueueError::KeyRangeOverflow { key: span, span })?;
        Ok(DialBucketQueue {
            buckets: vec![Vec::new(); size],
            span,
            cursor_key: 0,
            last_extracted: None,
            positions: PositionMap::new(),
            len: 0,
            seq: 0,
            tie,
            stats: QueueStats::default(),
        })
    }

    fn check_window(&self, key: u64) -> Result<(), QueueError> {
        if let Some(last) = self.last_extracted {
            if key < last {
                return Err(QueueError::MonotonicityViolation { key, last });
            }
        }
        let base = self.last_extracted.unwrap_or(0);
        if key > base + self.span {
            return Err(QueueError::KeyRangeOverflow {
                key,
                span: self.span,
            });
        }
        Ok(())
    }

    fn bucket_of(&self, key: u64) -> usize {
        (key % self.buckets.len() as u64) as usize
    }

    fn place(&mut self, slot: Slot) {
        let b = self.bucket_of(slot.key);
        let id = slot.id;
        self.buckets[b].push(slot);
        self.positions.insert(id, (b, self.buckets[b].len() - 1));
    }
}

impl MonotoneIntQueue for DialBucketQueue {
    fn insert(&mut self, id: usize, key: u64, tie_hint: u64) -> Result<(), QueueError> {
        if self.positions.contains_key(&id) {
            return Err(QueueError::DuplicateId(id));
        }
        self.check_window(key)?;
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
        self.check_window(new_key)?;
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
        loop {
            let b = self.bucket_of(self.cursor_key);
            if self.buckets[b].is_empty() {
                self.cursor_key += 1;
                self.stats.bucket_scans += 1;
                continue;
            }
            debug_assert!(self.buckets[b].iter().all(|s| s.key == self.cursor_key));
            let pos = pick_slot(&self.buckets[b], self.tie);
            let slot = remove_slot(&mut self.buckets[b], b, pos, &mut self.positions);
            self.len -= 1;
            self.last_extracted = Some(self.cursor_key);
            self.stats.extract_mins += 1;
            return Some((slot.id, slot.key));
        }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn last_extracted(&self) -> Option<u64> {
        self.last_extracted
    }

    fn stats(&self) -> QueueStats {
        self.stats
    }
}
