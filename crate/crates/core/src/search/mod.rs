//! Exhaustive backtracking searches over binary words.
//!
//! All searches extend words depth-first with 0 tried before 1, so node
//! counts, depths and deepest words are reproducible. Work can be split at a
//! fixed prefix depth into independent subtrees; merged reports are
//! identical to sequential ones for any worker count.

mod certify;
mod rules;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

pub use rules::RULE_NAMES;

/// Which backtrack rules are active (unavoidability search only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleSet {
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet { r1: true, r2: true, r3: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Fix the first letter to 0; sound because rules and certified counts
    /// are invariant under global complement. Halves the tree.
    pub first_letter_fixed: bool,
    /// Nodes at this depth are recorded but not extended; reaching one makes
    /// the outcome `DepthCapExceeded`.
    pub depth_cap: Option<usize>,
    pub rules: RuleSet,
    /// Split the tree into independent subtrees below this prefix depth and
    /// process them in parallel.
    pub split_depth: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            first_letter_fixed: true,
            depth_cap: None,
            rules: RuleSet::default(),
            split_depth: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The whole tree was exhausted: every branch ended with a rule firing
    /// (or the target count being reached).
    TreeFinite,
    DepthCapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes_visited: u64,
    pub max_depth: usize,
    pub deepest_word: Word,
    pub rule_fires: BTreeMap<String, u64>,
}

/// A depth-first engine: receives pushed/popped letters and decides whether
/// the current word is pruned (returning the name of the rule that fired).
pub(crate) trait DfsEngine: Send {
    fn root_pruned(&self) -> Option<&'static str> {
        None
    }
    fn push(&mut self, letter: u8) -> Option<&'static str>;
    fn pop(&mut self);
}

#[derive(Debug, Clone)]
struct Accum {
    nodes: u64,
    max_depth: usize,
    deepest: Vec<u8>,
    fires: BTreeMap<&'static str, u64>,
    cap_hit: bool,
}

impl Accum {
    fn new(depth: usize, word: Vec<u8>) -> Accum {
        Accum { nodes: 0, max_depth: depth, deepest: word, fires: BTreeMap::new(), cap_hit: false }
    }

    fn merge(&mut self, other: Accum) {
        self.nodes += other.nodes;
        self.cap_hit |= other.cap_hit;
        for (rule, n) in other.fires {
            *self.fires.entry(rule).or_default() += n;
        }
        // deepest: larger depth wins, ties go to the lexicographically
        // smaller word, matching sequential pre-order
        if other.max_depth > self.max_depth
            || (other.max_depth == self.max_depth && other.deepest < self.deepest)
        {
            self.max_depth = other.max_depth;
            self.deepest = other.deepest;
        }
    }
}

fn children(depth: usize, cfg: &SearchConfig) -> &'static [u8] {
    if depth == 0 && cfg.first_letter_fixed {
        &[0]
    } else {
        &[0, 1]
    }
}

fn dfs<E: DfsEngine>(engine: &mut E, word: &mut Vec<u8>, cfg: &SearchConfig, acc: &mut Accum) {
    for &x in children(word.len(), cfg) {
        word.push(x);
        let pruned = engine.push(x);
        acc.nodes += 1;
        if word.len() > acc.max_depth {
            acc.max_depth = word.len();
            acc.deepest = word.clone();
        }
        match pruned {
            Some(rule) => *acc.fires.entry(rule).or_default() += 1,
            None => {
                if Some(word.len()) == cfg.depth_cap {
                    acc.cap_hit = true;
                } else {
                    dfs(engine, word, cfg, acc);
                }
            }
        }
        engine.pop();
        word.pop();
    }
}

/// Like `dfs`, but stops at `split` depth, collecting alive nodes there as
/// subtree roots.
fn dfs_collect<E: DfsEngine>(
    engine: &mut E,
    word: &mut Vec<u8>,
    cfg: &SearchConfig,
    split: usize,
    acc: &mut Accum,
    roots: &mut Vec<Vec<u8>>,
) {
    for &x in children(word.len(), cfg) {
        word.push(x);
        let pruned = engine.push(x);
        acc.nodes += 1;
        if word.len() > acc.max_depth {
            acc.max_depth = word.len();
            acc.deepest = word.clone();
        }
        match pruned {
            Some(rule) => *acc.fires.entry(rule).or_default() += 1,
            None => {
                if word.len() == split {
                    roots.push(word.clone());
                } else {
                    dfs_collect(engine, word, cfg, split, acc, roots);
                }
            }
        }
        engine.pop();
        word.pop();
    }
}

fn run_search<E, F>(make_engine: F, cfg: &SearchConfig) -> SearchReport
where
    E: DfsEngine,
    F: Fn() -> E + Sync,
{
    let mut engine = make_engine();
    let mut acc = Accum::new(0, Vec::new());
    acc.nodes = 1; // the empty root word

    if let Some(rule) = engine.root_pruned() {
        *acc.fires.entry(rule).or_default() += 1;
        return finish(acc);
    }
    if cfg.depth_cap == Some(0) {
        acc.cap_hit = true;
        return finish(acc);
    }

    let split = cfg.split_depth.filter(|&d| d > 0 && cfg.depth_cap.map_or(true, |cap| d < cap));
    match split {
        None => {
            let mut word = Vec::new();
            dfs(&mut engine, &mut word, cfg, &mut acc);
        }
        Some(split) => {
            let mut word = Vec::new();
            let mut roots = Vec::new();
            dfs_collect(&mut engine, &mut word, cfg, split, &mut acc, &mut roots);
            let partials: Vec<Accum> = roots
                .par_iter()
                .map(|prefix| {
                    let mut engine = make_engine();
                    for &x in prefix {
                        let pruned = engine.push(x);
                        debug_assert!(pruned.is_none(), "subtree root must be alive");
                    }
                    let mut word = prefix.clone();
                    let mut acc = Accum::new(prefix.len(), prefix.clone());
                    dfs(&mut engine, &mut word, cfg, &mut acc);
                    acc
                })
                .collect();
            for partial in partials {
                acc.merge(partial);
            }
        }
    }
    finish(acc)
}

fn finish(acc: Accum) -> SearchReport {
    SearchReport {
        outcome: if acc.cap_hit {
            SearchOutcome::DepthCapExceeded
        } else {
            SearchOutcome::TreeFinite
        },
        nodes_visited: acc.nodes,
        max_depth: acc.max_depth,
        deepest_word: Word::new(Alphabet::BINARY, acc.deepest).unwrap(),
        rule_fires: acc.fires.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    }
}

/// Proves that every infinite binary word contains an imaged factor of
/// length 6: extends words depth-first, backtracking when
///
/// * R1 — the suffix is 0000 or 1111,
/// * R2 — the word contains the complement of its length-6 suffix,
/// * R3 — for some rule word f (given or complemented) occurring in the
///   word, a suffix parses as m(f) with |m(0)|+|m(1)| >= 3.
///
/// A `TreeFinite` outcome means no infinite word survives the rules.
pub fn thm3_search(rule_words: &[Word], cfg: &SearchConfig) -> Result<SearchReport> {
    let data = rules::RuleData::prepare(rule_words)?;
    Ok(run_search(|| rules::RuleEngine::new(&data, cfg.rules), cfg))
}

/// Proves that every infinite binary word contains at least `target` imaged
/// factors: a branch is pruned once the certified count — ε, distinct unary
/// factors, and bi-literal factors with a morphic witness inside the word —
/// reaches `target`. The count only grows under extension, so pruning is
/// sound, and `TreeFinite` means every infinite binary word reaches it.
pub fn thm5_search(target: u64, cfg: &SearchConfig) -> SearchReport {
    assert!(target >= 1, "target must be at least 1");
    run_search(|| certify::CertifyEngine::new(target), cfg)
}

/// Exhaustive search for binary words with no square of period at least
/// `min_forbidden_period`: returns the maximum length reached and every word
/// of that length. Errors loudly when some word of length `cap` still
/// qualifies, which signals an infinite language (true already for
/// `min_forbidden_period` = 3).
pub fn max_word_without_big_squares(
    min_forbidden_period: usize,
    cap: usize,
) -> Result<(usize, Vec<Word>)> {
    assert!(min_forbidden_period >= 1 && cap >= 1);
    let mut best_len = 0;
    let mut best: Vec<Word> = vec![Word::empty(Alphabet::BINARY)];
    let mut word = Vec::new();
    big_square_rec(min_forbidden_period, cap, &mut word, &mut best_len, &mut best)?;
    Ok((best_len, best))
}

fn big_square_rec(
    min_p: usize,
    cap: usize,
    word: &mut Vec<u8>,
    best_len: &mut usize,
    best: &mut Vec<Word>,
) -> Result<()> {
    for x in 0..2u8 {
        word.push(x);
        let n = word.len();
        let clean = (min_p..=n / 2).all(|p| word[n - 2 * p..n - p] != word[n - p..]);
        if clean {
            if n == cap {
                return Err(Error::AvoidanceNotFinite {
                    cap,
                    witness: word.iter().map(|s| s.to_string()).collect(),
                });
            }
            if n > *best_len {
                *best_len = n;
                best.clear();
            }
            if n == *best_len {
                best.push(Word::new(Alphabet::BINARY, word.clone()).unwrap());
            }
            big_square_rec(min_p, cap, word, best_len, best)?;
        }
        word.pop();
    }
    Ok(())
}

/// Reference recomputation of the certified imaged count, used by tests to
/// pin the incremental engine to `imaged_in_finite`.
pub fn certified_count_brute(w: &Word) -> u64 {
    certify::certified_count_brute(w)
}

/// The incremental certified count after each prefix of `w` (diagnostic;
/// index i is the count for the prefix of length i+1).
pub fn certified_counts_along(w: &Word) -> Vec<u64> {
    certify::counts_along(w.symbols())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_binary_words_stop_at_three() {
        let (len, witnesses) = max_word_without_big_squares(1, 30).unwrap();
        assert_eq!(len, 3);
        let texts: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
        assert_eq!(texts, vec!["010", "101"]);
    }

    #[test]
    fn period_three_squares_leave_an_infinite_language() {
        // weaker constraint than period >= 2: the search must overflow any
        // cap rather than report a spurious maximum
        match max_word_without_big_squares(3, 30) {
            Err(Error::AvoidanceNotFinite { cap: 30, .. }) => {}
            other => panic!("expected cap overflow, got {other:?}"),
        }
    }

    #[test]
    fn target_one_prunes_at_the_root() {
        let report = thm5_search(1, &SearchConfig::default());
        assert_eq!(report.outcome, SearchOutcome::TreeFinite);
        assert_eq!(report.nodes_visited, 1);
        assert_eq!(report.max_depth, 0);
        assert_eq!(report.rule_fires.get("target"), Some(&1));
    }

    #[test]
    fn small_targets_terminate_quickly() {
        for target in 2..=6 {
            let report = thm5_search(target, &SearchConfig::default());
            assert_eq!(report.outcome, SearchOutcome::TreeFinite, "target {target}");
        }
    }

    #[test]
    fn thm5_depth_cap_reports_exceeded() {
        let cfg = SearchConfig { depth_cap: Some(4), ..SearchConfig::default() };
        let report = thm5_search(30, &cfg);
        assert_eq!(report.outcome, SearchOutcome::DepthCapExceeded);
        assert_eq!(report.max_depth, 4);
    }
}
