//! Indexed binary min-heap used as the comparison baseline. Extraction
//! always returns a globally minimal key; the monotone usage contract is
//! still checked so misuse surfaces here the same way it would on the
//! bucketed queues.

use std::collections::HashMap;

use super::{MonotoneIntQueue, QueueError, QueueStats, TieBreak};

struct Entry {
    id: usize,
    key: u64,
    seq: u64,
    hint: u64,
}

pub struct BinaryHeapQueue {
    heap: Vec<Entry>,
    pos: HashMap<usize, usize>,
    last_extracted: Option<u64>,
    seq: u64,
    tie: TieBreak,
    stats: QueueStats,
}

impl BinaryHeapQueue {
    pub fn new(tie: TieBreak) -> Self {
        BinaryHeapQueue {
            heap: Vec::new(),
            pos: HashMap::new(),
            last_extracted: None,
            seq: 0,
            tie,
            stats: QueueStats::default(),
        }
    }

    fn before(&self, a: &Entry, b: &Entry) -> bool {
        if a.key != b.key {
            return a.key < b.key;
        }
        match self.tie {
            TieBreak::Fifo => a.seq < b.seq,
            TieBreak::Lifo => a.seq > b.seq,
            TieBreak::MaxHintFirst => a.hint > b.hint || (a.hint == b.hint && a.seq < b.seq),
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.pos.insert(self.heap[i].id, i);
        self.pos.insert(self.heap[j].id, j);
    }

    fn sift_up(&mut self, mut i: usize) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.before(&self.heap[i], &self.heap[parent]) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut i: usize) {
        loop {
            let mut smallest = i;
            for child in [2 * i + 1, 2 * i + 2] {
                if child < self.heap.len() && self.before(&self.heap[child], &self.heap[smallest]) {
                    smallest = child;
                }
            }
            if smallest == i {
                break;
            }
            self.swap(i, smallest);
            i = smallest;
        }
    }

    fn check_monotone(&self, key: u64) -> Result<(), QueueError> {
        if let Some(last) = self.last_extracted {
            if key < last {
                return Err(QueueError::MonotonicityViolation { key, last });
            }
        }
        Ok(())
    }
}

impl MonotoneIntQueue for BinaryHeapQueue {
    fn insert(&mut self, id: usize, key: u64, tie_hint: u64) -> Result<(), QueueError> {
        if self.pos.contains_key(&id) {
            return Err(QueueError::DuplicateId(id));
        }
        self.check_monotone(key)?;
        let seq = self.seq;
        self.seq += 1;
        self.heap.push(Entry {
            id,
            key,
            seq,
            hint: tie_hint,
        });
        self.pos.insert(id, self.heap.len() - 1);
        self.sift_up(self.heap.len() - 1);
        self.stats.inserts += 1;
        Ok(())
    }

    fn decrease_key(&mut self, id: usize, new_key: u64, tie_hint: u64) -> Result<(), QueueError> {
        let &i = self.pos.get(&id).ok_or(QueueError::UnknownId(id))?;
        let current = self.heap[i].key;
        if new_key > current {
            return Err(QueueError::KeyIncrease {
                new: new_key,
                current,
            });
        }
        self.check_monotone(new_key)?;
        self.heap[i].key = new_key;
        self.heap[i].hint = tie_hint;
        self.sift_up(i);
        self.stats.decrease_keys += 1;
        Ok(())
    }

    fn extract_min(&mut self) -> Option<(usize, u64)> {
        if self.heap.is_empty() {
            return None;
        }
        let lastpos = self.heap.len() - 1;
        self.swap(0, lastpos);
        let entry = self.heap.pop().unwrap();
        self.pos.remove(&entry.id);
        if !self.heap.is_empty() {
            self.sift_down(0);
        }
        self.last_extracted = Some(entry.key);
        self.stats.extract_mins += 1;
        Some((entry.id, entry.key))
    }

    fn len(&self) -> usize {
        self.heap.len()
    }

    fn last_extracted(&self) -> Option<u64> {
        self.last_extracted
    }

    fn stats(&self) -> QueueStats {
        self.stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::queue::contract_tests;

    #[test]
    fn contract() {
        contract_tests::run_all(|| Box::new(BinaryHeapQueue::new(TieBreak::Fifo)));
    }

    #[test]
    fn decrease_then_extract_in_new_position() {
        let mut q = BinaryHeapQueue::new(TieBreak::Fifo);
        q.insert(0, 9, 0).unwrap();
        q.insert(1, 5, 0).unwrap();
        q.decrease_key(0, 4, 0).unwrap();
        assert_eq!(q.extract_min(), Some((0, 4)));
        assert_eq!(q.extract_min(), Some((1, 5)));
    }
}
