//! Two-level bucket queue: top-level buckets of width `B` plus an expanded
//! bottom level of `B` unit buckets covering the active top bucket's range.

use super::{pick_slot, remove_slot, MonotoneIntQueue, PositionMap, QueueError, QueueStats, Slot, TieBreak};

pub struct TwoLevelBucketQueue {
    // buckets[0..width] is the bottom level (unit buckets), buckets[width..]
    // the circular top level (width-sized ranges)
    buckets: Vec<Vec<Slot>>,
    width: u64,
    num_top: u64,
    span: u64,
    // top-level range currently expanded into the bottom buckets
    active_top: u64,
    bottom_cursor: u64,
    last_extracted: Option<u64>,
    positions: PositionMap,
    len: usize,
    seq: u64,
    tie: TieBreak,
    stats: QueueStats,
}

impl TwoLevelBucketQueue {
    pub fn new(span: u64, width: u64, tie: TieBreak) -> Result<Self, QueueError> {
        if width == 0 {
            return Err(QueueError::InvalidParameter("bucket width must be >= 1".into()));
        }
        if span >= (1 << 62) {
            return Err(QueueError::KeyRangeOverflow { key: span, span });
        }
        let num_top = span / width + 2;
        let total = usize::try_from(width + num_top)
            .map_err(|_| QueueError::KeyRangeOverflow { key: span, span })?;
        Ok(TwoLevelBucketQueue {
            buckets: vec![Vec::new(); total],
            width,
            num_top,
            span,
            active_top: 0,
            bottom_cursor: 0,
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
        let top = key / self.width;
        if top == self.active_top {
            (key % self.width) as usize
        } else {
            (self.width + top % self.num_top) as usize
        }
    }

    fn place(&mut self, slot: Slot) {
        let b = self.bucket_of(slot.key);
        let id = slot.id;
        self.buckets[b].push(slot);
        self.positions.insert(id, (b, self.buckets[b].len() - 1));
    }
}

impl MonotoneIntQueue for TwoLevelBucketQueue {
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
            // sweep the bottom level of the active range
            while self.bottom_cursor < self.width {
                let b = self.bottom_cursor as usize;
                if self.buckets[b].is_empty() {
                    self.bottom_cursor += 1;
                    self.stats.bucket_scans += 1;
                    continue;
                }
                let key = self.active_top * self.width + self.bottom_cursor;
                debug_assert!(self.buckets[b].iter().all(|s| s.key == key));
                let pos = pick_slot(&self.buckets[b], self.tie);
                let slot = remove_slot(&mut self.buckets[b], b, pos, &mut self.positions);
                self.len -= 1;
                self.last_extracted = Some(key);
                self.stats.extract_mins += 1;
                return Some((slot.id, slot.key));
            }
            // bottom exhausted: advance to the next nonempty top bucket and
            // expand it into unit buckets
            loop {
                self.active_top += 1;
                self.bottom_cursor = 0;
                let t = (self.width + self.active_top % self.num_top) as usize;
                if self.buckets[t].is_empty() {
                    self.stats.bucket_scans += 1;
                    continue;
                }
                let moved = std::mem::take(&mut self.buckets[t]);
                for slot in &moved {
                    self.positions.remove(&slot.id);
                }
                for slot in moved {
                    debug_assert_eq!(slot.key / self.width, self.active_top);
                    self.place(slot);
                }
                break;
            }
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
