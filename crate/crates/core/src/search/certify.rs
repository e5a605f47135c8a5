//! Incremental certified-imaged-count engine for the lower-bound search.
//!
//! The certified count of a word W is 1 (for ε) + the number of distinct
//! unary factors (the two maximal runs) + the number of bi-literal factors
//! with a morphic witness inside W. Certified factors are closed under
//! bi-literal factors — a witness for f restricts to every factor of f — so
//! candidates can be grown frontier-style: a word becomes a candidate only
//! once both of its maximal proper factors are certified or unary. Appending
//! a letter adds one candidate occurrence position per image split, keeping
//! nodes cheap; a journal undoes everything on backtrack.

use std::collections::HashSet;

use super::DfsEngine;
use crate::imaged::{imaged_in_finite, split_images, WitnessKind};
use crate::words::{contains_slice, Word};

type Key = Box<[u8]>;

struct Candidate {
    letters: Key,
    n0: usize,
    n1: usize,
    certified: bool,
}

struct Pending {
    letters: Key,
    alive: bool,
}

#[derive(Default)]
struct Frame {
    maxrun: [usize; 2],
    count: u64,
    active_len: usize,
    pending_len: usize,
    deactivated: Vec<usize>,
    certified_added: Vec<Key>,
    certified_flips: Vec<usize>,
    known_added: Vec<Key>,
}

pub(crate) struct CertifyEngine {
    target: u64,
    word: Vec<u8>,
    run_len: Vec<usize>,
    maxrun: [usize; 2],
    /// Certified bi-literal factors.
    certified: HashSet<Key>,
    /// Candidates that are factors of the current word, with certification
    /// state; never removed, only flagged.
    active: Vec<Candidate>,
    /// Eligible candidates that are not factors yet.
    pending: Vec<Pending>,
    /// Every word ever seeded or spawned on this branch (dedupe).
    known: HashSet<Key>,
    /// 1 + distinct unary factors + certified bi-literal factors.
    count: u64,
    frames: Vec<Frame>,
}

impl CertifyEngine {
    pub fn new(target: u64) -> CertifyEngine {
        let mut engine = CertifyEngine {
            target,
            word: Vec::new(),
            run_len: Vec::new(),
            maxrun: [0, 0],
            certified: HashSet::new(),
            active: Vec::new(),
            pending: Vec::new(),
            known: HashSet::new(),
            count: 1,
            frames: Vec::new(),
        };
        // the length-2 bi-literal words; everything longer grows from them
        for seed in [[0u8, 1], [1u8, 0]] {
            let key: Key = seed.to_vec().into_boxed_slice();
            engine.known.insert(key.clone());
            engine.pending.push(Pending { letters: key, alive: true });
        }
        engine
    }

    fn certify(&mut self, index: usize, queue: &mut Vec<Key>) {
        let frame = self.frames.last_mut().unwrap();
        self.active[index].certified = true;
        frame.certified_flips.push(index);
        let key = self.active[index].letters.clone();
        self.certified.insert(key.clone());
        frame.certified_added.push(key.clone());
        self.count += 1;
        queue.push(key);
    }

    /// True when every maximal proper factor of `letters` is unary or
    /// certified.
    fn eligible(&self, letters: &[u8]) -> bool {
        let parents = [&letters[1..], &letters[..letters.len() - 1]];
        parents.into_iter().all(|p| {
            p.iter().all(|&s| s == p[0]) || self.certified.contains(p)
        })
    }

    /// Scans every occurrence of every image split of `letters` ending at or
    /// before the current length. Used once, on activation.
    fn full_scan(&self, n0: usize, n1: usize, letters: &[u8]) -> bool {
        let n = self.word.len();
        let mut a = 1;
        while n0 * a + n1 <= n {
            let mut b = 1;
            while n0 * a + n1 * b <= n {
                let len = n0 * a + n1 * b;
                for start in 0..=n - len {
                    if split_images(letters, &self.word[start..start + len], a, b).is_some() {
                        return true;
                    }
                }
                b += 1;
            }
            a += 1;
        }
        false
    }

    /// Scans only occurrences ending at the newest position: one start per
    /// image split. Used on every push for already-active candidates.
    fn suffix_scan(&self, n0: usize, n1: usize, letters: &[u8]) -> bool {
        let n = self.word.len();
        let mut a = 1;
        while n0 * a + n1 <= n {
            let mut b = 1;
            while n0 * a + n1 * b <= n {
                let len = n0 * a + n1 * b;
                if split_images(letters, &self.word[n - len..], a, b).is_some() {
                    return true;
                }
                b += 1;
            }
            a += 1;
        }
        false
    }

    fn activate(&mut self, letters: Key, queue: &mut Vec<Key>) {
        let n1 = letters.iter().filter(|&&s| s == 1).count();
        let n0 = letters.len() - n1;
        let hit = self.full_scan(n0, n1, &letters);
        self.active.push(Candidate { letters, n0, n1, certified: false });
        if hit {
            self.certify(self.active.len() - 1, queue);
        }
    }

    /// Extensions of a freshly certified word join the frontier when their
    /// other parent is unary or certified too.
    fn spawn_extensions(&mut self, of: &[u8], queue: &mut Vec<Key>) {
        for place_left in [true, false] {
            for letter in 0..2u8 {
                let mut ext = Vec::with_capacity(of.len() + 1);
                if place_left {
                    ext.push(letter);
                    ext.extend_from_slice(of);
                } else {
                    ext.extend_from_slice(of);
                    ext.push(letter);
                }
                if self.known.contains(ext.as_slice()) || !self.eligible(&ext) {
                    continue;
                }
                let key: Key = ext.into_boxed_slice();
                self.known.insert(key.clone());
                self.frames.last_mut().unwrap().known_added.push(key.clone());
                if contains_slice(&self.word, &key) {
                    self.activate(key, queue);
                } else {
                    self.pending.push(Pending { letters: key, alive: true });
                }
            }
        }
    }
}

impl DfsEngine for CertifyEngine {
    fn root_pruned(&self) -> Option<&'static str> {
        (self.count >= self.target).then_some("target")
    }

    fn push(&mut self, letter: u8) -> Option<&'static str> {
        let run = match self.word.last() {
            Some(&prev) if prev == letter => self.run_len.last().unwrap() + 1,
            _ => 1,
        };
        self.frames.push(Frame {
            maxrun: self.maxrun,
            count: self.count,
            active_len: self.active.len(),
            pending_len: self.pending.len(),
            ..Frame::default()
        });
        self.word.push(letter);
        self.run_len.push(run);
        if run > self.maxrun[letter as usize] {
            self.maxrun[letter as usize] = run;
            self.count += 1; // one new unary factor
        }

        let mut queue: Vec<Key> = Vec::new();

        // pending words become factors only via an occurrence ending at the
        // newest position, i.e. as a suffix
        let pending_at_entry = self.frames.last().unwrap().pending_len;
        let n = self.word.len();
        for i in 0..pending_at_entry {
            if !self.pending[i].alive {
                continue;
            }
            let len = self.pending[i].letters.len();
            if len > n || self.word[n - len..] != *self.pending[i].letters {
                continue;
            }
            self.pending[i].alive = false;
            self.frames.last_mut().unwrap().deactivated.push(i);
            let key = self.pending[i].letters.clone();
            self.activate(key, &mut queue);
        }

        // incremental scan of previously active candidates
        let active_at_entry = self.frames.last().unwrap().active_len;
        for i in 0..active_at_entry {
            if self.active[i].certified {
                continue;
            }
            let (n0, n1) = (self.active[i].n0, self.active[i].n1);
            let letters = self.active[i].letters.clone();
            if self.suffix_scan(n0, n1, &letters) {
                self.certify(i, &mut queue);
            }
        }

        // cascade: certifications enable new frontier candidates
        while let Some(f) = queue.pop() {
            if self.count >= self.target {
                break; // branch is pruned; the rest would be undone anyway
            }
            self.spawn_extensions(&f, &mut queue);
        }

        (self.count >= self.target).then_some("target")
    }

    fn pop(&mut self) {
        let frame = self.frames.pop().unwrap();
        self.word.pop();
        self.run_len.pop();
        self.maxrun = frame.maxrun;
        self.count = frame.count;
        for i in frame.certified_flips {
            self.active[i].certified = false;
        }
        for key in frame.certified_added {
            self.certified.remove(&key);
        }
        for key in frame.known_added {
            self.known.remove(&key);
        }
        self.active.truncate(frame.active_len);
        self.pending.truncate(frame.pending_len);
        for i in frame.deactivated {
            self.pending[i].alive = true;
        }
    }
}

/// Incremental counts along every prefix of `word`.
pub(crate) fn counts_along(word: &[u8]) -> Vec<u64> {
    let mut engine = CertifyEngine::new(u64::MAX);
    word.iter()
        .map(|&x| {
            engine.push(x);
            engine.count
        })
        .collect()
}

/// Reference recomputation: counts ε, unary factors, and bi-literal factors
/// certified by `imaged_in_finite`.
pub(crate) fn certified_count_brute(w: &Word) -> u64 {
    let mut count = 1u64;
    let mut seen: HashSet<&[u8]> = HashSet::new();
    let symbols = w.symbols();
    for start in 0..symbols.len() {
        for end in start + 1..=symbols.len() {
            let f = &symbols[start..end];
            if !seen.insert(f) {
                continue;
            }
            let f_word = Word::new(w.alphabet(), f.to_vec()).unwrap();
            if f_word.is_unary() {
                count += 1;
            } else if let Some(witness) = imaged_in_finite(&f_word, w) {
                debug_assert_eq!(witness.kind, WitnessKind::Morphic);
                count += 1;
            }
        }
    }
    count
}
