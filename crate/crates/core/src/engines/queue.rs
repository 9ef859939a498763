//! Pair queues: pure signature order, or degree buckets for F5 presorting.

use alloc::collections::BinaryHeap;
use core::cmp::{Ordering, Reverse};

use crate::sigcore::{CriticalPair, SigKey, SigOrderKind, SigOrderSpec};

pub(super) struct Entry {
    key: SigKey,
    pair: CriticalPair,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key).then(self.pair.entry_seq.cmp(&other.pair.entry_seq))
    }
}

type MinHeap = BinaryHeap<Reverse<Entry>>;

pub(super) enum PairQueue {
    /// Minimal signature first, ties by entry order.
    Signature(MinHeap),
    /// Pairs of the current degree `d` sit in `bucket` (signature order);
    /// everything else waits in `rest`, keyed by (phase, degree, signature).
    /// Under POT the phase is the signature index, which keeps the
    /// computation incremental.
    Presort { bucket: MinHeap, rest: MinHeap, current: Option<(i32, u32)> },
}

fn phase(spec: &SigOrderSpec, pair: &CriticalPair) -> i32 {
    match spec.kind {
        SigOrderKind::Pot => pair.pair_sig.idx as i32,
        SigOrderKind::Schreyer => 0,
    }
}

impl PairQueue {
    pub fn by_signature() -> Self {
        PairQueue::Signature(BinaryHeap::new())
    }

    pub fn presorted() -> Self {
        PairQueue::Presort { bucket: BinaryHeap::new(), rest: BinaryHeap::new(), current: None }
    }

    pub fn push(&mut self, spec: &SigOrderSpec, pair: CriticalPair) {
        match self {
            PairQueue::Signature(h) => h.push(Reverse(Entry { key: spec.key(&pair.pair_sig), pair })),
            PairQueue::Presort { bucket, rest, current } => {
                let ph = phase(spec, &pair);
                match current {
                    Some((cp, d)) if *cp == ph && pair.pair_deg <= *d => {
                        bucket.push(Reverse(Entry { key: spec.key(&pair.pair_sig), pair }))
                    }
                    _ => {
                        let mut key = SigKey::new();
                        key.push(ph);
                        key.push(pair.pair_deg as i32);
                        key.extend(spec.key(&pair.pair_sig));
                        rest.push(Reverse(Entry { key, pair }));
                    }
                }
            }
        }
    }

    pub fn pop(&mut self, spec: &SigOrderSpec) -> Option<CriticalPair> {
        match self {
            PairQueue::Signature(h) => h.pop().map(|Reverse(e)| e.pair),
            PairQueue::Presort { bucket, rest, current } => {
                if bucket.is_empty() {
                    let Reverse(first) = rest.pop()?;
                    let prefix = (first.key[0], first.key[1]);
                    *current = Some((prefix.0, prefix.1 as u32));
                    let mut move_in = |e: Entry| {
                        bucket.push(Reverse(Entry { key: spec.key(&e.pair.pair_sig), pair: e.pair }))
                    };
                    move_in(first);
                    while rest.peek().is_some_and(|Reverse(e)| (e.key[0], e.key[1]) == prefix) {
                        let Reverse(e) = rest.pop().unwrap();
                        move_in(e);
                    }
                }
                bucket.pop().map(|Reverse(e)| e.pair)
            }
        }
    }
}
