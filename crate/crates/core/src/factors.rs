//! Exact factor sets of subshifts, stored in a prefix tree.
//!
//! For a pure morphic word the set of factors up to a length bound is the
//! least set containing the seed image that is closed under sub-factors and
//! under images: every factor of `f(w)` of bounded length, for `w` already
//! stored, is stored. The closure terminates because there are finitely many
//! words of bounded length, and it is exact because a length-`n` factor of
//! `f(x) = x` always lies inside the image of a factor of length at most `n`
//! (images of stored letters are non-empty or vanish entirely).

use std::collections::VecDeque;

use crate::alphabet::{Letter, TotalOrder};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lazy::LazyWord;
use crate::morphism::Morphism;
use crate::word::Word;

#[derive(Debug, Clone, Default)]
struct Node {
    children: Vec<(Letter, u32)>, // sorted by letter index
}

impl Node {
    fn child(&self, l: Letter) -> Option<u32> {
        self.children
            .binary_search_by_key(&l, |(c, _)| *c)
            .ok()
            .map(|i| self.children[i].1)
    }
}

/// All factors of a word up to `max_length`, with membership, extension,
/// and enumeration queries. Immutable after build; queries are read-only.
#[derive(Debug, Clone)]
pub struct FactorSet {
    nodes: Vec<Node>,
    max_length: usize,
    stored: u64,
}

impl FactorSet {
    fn new(max_length: usize) -> FactorSet {
        FactorSet { nodes: vec![Node::default()], max_length, stored: 0 }
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    /// Number of distinct non-empty factors stored.
    pub fn stored_factors(&self) -> u64 {
        self.stored
    }

    /// Inserts one window; returns how many nodes (new factors) were created.
    fn insert(&mut self, w: &[Letter], budget: u64) -> Result<usize> {
        let mut cur = 0u32;
        let mut created = 0usize;
        for &l in w {
            match self.nodes[cur as usize].child(l) {
                Some(next) => cur = next,
                None => {
                    if self.stored >= budget {
                        return Err(Error::WorkBudget { budget });
                    }
                    let next = self.nodes.len() as u32;
                    self.nodes.push(Node::default());
                    let node = &mut self.nodes[cur as usize];
                    let pos = node
                        .children
                        .binary_search_by_key(&l, |(c, _)| *c)
                        .unwrap_err();
                    node.children.insert(pos, (l, next));
                    self.stored += 1;
                    created += 1;
                    cur = next;
                }
            }
        }
        Ok(created)
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.walk(w).is_some()
    }

    fn walk(&self, w: &[Letter]) -> Option<u32> {
        let mut cur = 0u32;
        for &l in w {
            cur = self.nodes[cur as usize].child(l)?;
        }
        Some(cur)
    }

    /// The letters `c` with `w·c` stored, in alphabet order.
    pub fn extensions(&self, w: &[Letter]) -> Vec<Letter> {
        match self.walk(w) {
            Some(n) => self.nodes[n as usize].children.iter().map(|(l, _)| *l).collect(),
            None => Vec::new(),
        }
    }

    /// The letters occurring at all (factors of length 1).
    pub fn occurring_letters(&self) -> Vec<Letter> {
        self.extensions(&[])
    }

    /// All stored words of exactly length `n`.
    pub fn words_of_length(&self, n: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.dfs_length(0, n, &mut path, &mut out);
        out
    }

    /// All stored words of exactly length `n` beginning with `b`.
    pub fn words_of_length_starting(&self, n: usize, b: Letter) -> Vec<Word> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        if let Some(child) = self.nodes[0].child(b) {
            let mut path = vec![b];
            self.dfs_length(child, n - 1, &mut path, &mut out);
        }
        out
    }

    fn dfs_length(&self, node: u32, remaining: usize, path: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::from_letters(path.clone()));
            return;
        }
        for (l, child) in &self.nodes[node as usize].children {
            path.push(*l);
            self.dfs_length(*child, remaining - 1, path, out);
            path.pop();
        }
    }

    /// Greedy minimal walk: starting from `b`, repeatedly append the least
    /// stored extension under `order`. Requires `n + 1 <= max_length` so the
    /// final step still sees a right extension inside the set.
    pub fn greedy_minimal(&self, b: Letter, order: &TotalOrder, n: usize) -> Result<Word> {
        if n == 0 {
            return Ok(Word::empty());
        }
        if n + 1 > self.max_length {
            return Err(Error::Precondition(format!(
                "greedy walk of {} symbols needs factors of length {}, set holds {}",
                n,
                n + 1,
                self.max_length
            )));
        }
        let mut node = self.walk(&[b]).ok_or_else(|| {
            Error::LetterAbsent(format!("letter index {}", b.index()))
        })?;
        let mut out = vec![b];
        while out.len() < n {
            let next = self.nodes[node as usize]
                .children
                .iter()
                .min_by_key(|(l, _)| order.rank(*l))
                .copied();
            match next {
                Some((l, child)) => {
                    out.push(l);
                    node = child;
                }
                None => {
                    return Err(Error::Internal(format!(
                        "stored factor of length {} has no right extension",
                        out.len()
                    )))
                }
            }
        }
        Ok(Word::from_letters(out))
    }

    /// The lexicographic minimum over all stored words of length `n` that
    /// begin with `b` — the brute-force cross-check for the greedy walk.
    pub fn min_word_of_length_starting(
        &self,
        n: usize,
        b: Letter,
        order: &TotalOrder,
    ) -> Option<Word> {
        self.words_of_length_starting(n, b)
            .into_iter()
            .min_by(|x, y| {
                let n = x.len().min(y.len());
                for i in 0..n {
                    match order.cmp_letters(x[i], y[i]) {
                        std::cmp::Ordering::Equal => continue,
                        other => return other,
                    }
                }
                x.len().cmp(&y.len())
            })
    }

    /// Is there a stored word of exactly length `n` all of whose letters
    /// satisfy the predicate?
    pub fn has_word_of_length_over(&self, n: usize, pred: impl Fn(Letter) -> bool) -> bool {
        fn go(
            fs: &FactorSet,
            node: u32,
            remaining: usize,
            pred: &impl Fn(Letter) -> bool,
        ) -> bool {
            if remaining == 0 {
                return true;
            }
            fs.nodes[node as usize]
                .children
                .iter()
                .any(|(l, child)| pred(*l) && go(fs, *child, remaining - 1, pred))
        }
        go(self, 0, n, &pred)
    }
}

fn harvest(
    fs: &mut FactorSet,
    word: &[Letter],
    queue: Option<&mut VecDeque<Word>>,
    budget: u64,
) -> Result<()> {
    let max_len = fs.max_length;
    let mut local = VecDeque::new();
    let q = match queue {
        Some(q) => q,
        None => &mut local,
    };
    for i in 0..word.len() {
        let end = (i + max_len).min(word.len());
        let window = &word[i..end];
        if fs.insert(window, budget)? > 0 {
            q.push_back(Word::from_letters(window.to_vec()));
        }
    }
    Ok(())
}

/// Exactly the factors of `f^ω(seed)` up to length `n`, by closure iteration.
pub fn build_factors(m: &Morphism, seed: Letter, n: usize, caps: &Caps) -> Result<FactorSet> {
    m.prolongable_check(seed)?;
    let mut fs = FactorSet::new(n.max(1));
    let mut queue = VecDeque::new();
    harvest(&mut fs, m.image(seed).letters(), Some(&mut queue), caps.work_budget)?;
    while let Some(w) = queue.pop_front() {
        let fw = m.apply(&w)?;
        harvest(&mut fs, fw.letters(), Some(&mut queue), caps.work_budget)?;
    }
    Ok(fs)
}

/// Exactly the factors of `g(f^ω(seed))` up to length `n` for non-erasing
/// `g`: every such factor lies inside the image of an inner factor of length
/// at most `n + 1`.
pub fn build_factors_coded(
    m: &Morphism,
    seed: Letter,
    g: &Morphism,
    n: usize,
    caps: &Caps,
) -> Result<FactorSet> {
    if let Some(l) = g.source().letters().find(|l| g.image(*l).is_empty()) {
        return Err(Error::ErasingImage(g.source().token(l).to_string()));
    }
    let inner = build_factors(m, seed, n + 1, caps)?;
    let mut fs = FactorSet::new(n.max(1));
    for v in inner.words_of_length(n + 1) {
        let gv = g.apply(&v)?;
        harvest(&mut fs, gv.letters(), None, caps.work_budget)?;
    }
    Ok(fs)
}

/// Factors of a sampled prefix of an arbitrary word, up to length `n`.
/// This is a subset of the true factor set; completeness depends on the
/// horizon and is the caller's concern.
pub fn build_factors_sampled(
    x: &LazyWord,
    horizon: usize,
    n: usize,
    caps: &Caps,
) -> Result<FactorSet> {
    let prefix = x.prefix_up_to(horizon)?;
    let mut fs = FactorSet::new(n.max(1));
    harvest(&mut fs, prefix.letters(), None, caps.work_budget)?;
    Ok(fs)
}
