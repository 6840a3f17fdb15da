//! Infinite words materialized on demand.
//!
//! A [`LazyWord`] wraps a generator and an append-only memoized prefix, so
//! `prefix(n)` is deterministic and `prefix(n)` is always a prefix of
//! `prefix(m)` for `n <= m`. Cloning shares the memo. A hard symbol cap
//! turns runaway expansions into a clean resource error instead of memory
//! exhaustion. The handle is intentionally not `Sync`: share it across
//! threads only by giving each thread its own word.

use std::cell::RefCell;
use std::rc::Rc;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word::Word;

/// Default hard cap on materialized symbols per word.
pub const DEFAULT_SYMBOL_CAP: usize = 10_000_000;

/// A custom prefix producer for words that are not built from a morphism,
/// e.g. greedy extremal streams.
pub trait PrefixSource {
    /// Extend `memo` to at least `want` symbols, or return an error.
    fn fill(&mut self, memo: &mut Vec<Letter>, want: usize) -> Result<()>;
}

enum Gen {
    /// No further symbols; the word is finite (degenerate for subshift use).
    Finite,
    /// Fixed point of a prolongable morphism: the memo is extended by
    /// applying the morphism to not-yet-expanded memo letters, so producing
    /// N symbols costs O(N) image expansions overall.
    FixedPoint { m: Morphism, next: usize },
    /// Letterwise image of another lazy word under a non-erasing morphism.
    Image { m: Morphism, base: LazyWord, pos: usize },
    /// `pre · per · per · per ⋯`.
    Periodic { pre: Word, per: Word },
    /// `pre · base[drop..]`.
    Affix { pre: Word, drop: usize, base: LazyWord },
    Dynamic(Box<dyn PrefixSource>),
}

struct Inner {
    memo: Vec<Letter>,
    gen: Gen,
    cap: usize,
}

/// An infinite (or degenerately finite) word with a memoized prefix.
#[derive(Clone)]
pub struct LazyWord(Rc<RefCell<Inner>>);

impl LazyWord {
    fn new(memo: Vec<Letter>, gen: Gen, cap: usize) -> LazyWord {
        LazyWord(Rc::new(RefCell::new(Inner { memo, gen, cap })))
    }

    /// The one-sided fixed point `f^ω(a)`; fails when `f` is not
    /// prolongable at `a`.
    pub fn fixed_point(m: &Morphism, a: Letter, cap: usize) -> Result<LazyWord> {
        m.prolongable_check(a)?;
        let memo = m.image(a).letters().to_vec();
        Ok(LazyWord::new(memo, Gen::FixedPoint { m: m.clone(), next: 1 }, cap))
    }

    /// The image of `base` under a non-erasing morphism. A coding is the
    /// common case, but any non-erasing morphism keeps prefixes productive.
    pub fn coded(m: &Morphism, base: &LazyWord) -> Result<LazyWord> {
        if let Some(l) = m.source().letters().find(|l| m.image(*l).is_empty()) {
            return Err(Error::ErasingImage(m.source().token(l).to_string()));
        }
        let cap = base.cap();
        Ok(LazyWord::new(
            Vec::new(),
            Gen::Image { m: m.clone(), base: base.clone(), pos: 0 },
            cap,
        ))
    }

    /// The ultimately periodic word `pre · per^ω`.
    pub fn periodic(pre: Word, per: Word) -> Result<LazyWord> {
        if per.is_empty() {
            return Err(Error::Precondition("period must be non-empty".into()));
        }
        Ok(LazyWord::new(Vec::new(), Gen::Periodic { pre, per }, DEFAULT_SYMBOL_CAP))
    }

    /// A finite word; extending past its end is an error.
    pub fn finite(w: Word) -> LazyWord {
        LazyWord::new(w.letters().to_vec(), Gen::Finite, DEFAULT_SYMBOL_CAP)
    }

    /// `pre · base[drop..]`.
    pub fn affix(pre: Word, drop: usize, base: &LazyWord) -> LazyWord {
        let cap = base.cap();
        LazyWord::new(Vec::new(), Gen::Affix { pre, drop, base: base.clone() }, cap)
    }

    pub fn dynamic(src: Box<dyn PrefixSource>, cap: usize) -> LazyWord {
        LazyWord::new(Vec::new(), Gen::Dynamic(src), cap)
    }

    pub fn cap(&self) -> usize {
        self.0.borrow().cap
    }

    pub fn with_cap(self, cap: usize) -> LazyWord {
        self.0.borrow_mut().cap = cap;
        self
    }

    /// True when the generator has nothing more to produce.
    pub fn is_exhausted(&self) -> bool {
        matches!(self.0.borrow().gen, Gen::Finite)
    }

    pub fn materialized_len(&self) -> usize {
        self.0.borrow().memo.len()
    }

    /// Exactly the first `n` symbols.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        self.ensure(n)?;
        Ok(Word::from_letters(self.0.borrow().memo[..n].to_vec()))
    }

    /// The first `min(n, available)` symbols: like [`LazyWord::prefix`] but
    /// a finite word simply yields what it has.
    pub fn prefix_up_to(&self, n: usize) -> Result<Word> {
        match self.ensure(n) {
            Ok(()) => {}
            Err(Error::FiniteWord { .. }) => {}
            Err(e) => return Err(e),
        }
        let inner = self.0.borrow();
        let k = n.min(inner.memo.len());
        Ok(Word::from_letters(inner.memo[..k].to_vec()))
    }

    pub fn get(&self, i: usize) -> Result<Letter> {
        self.ensure(i + 1)?;
        Ok(self.0.borrow().memo[i])
    }

    /// `Ok(None)` past the end of a finite word.
    pub fn try_get(&self, i: usize) -> Result<Option<Letter>> {
        match self.ensure(i + 1) {
            Ok(()) => Ok(Some(self.0.borrow().memo[i])),
            Err(Error::FiniteWord { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn ensure(&self, want: usize) -> Result<()> {
        // Fast path without touching the generator.
        if self.0.borrow().memo.len() >= want {
            return Ok(());
        }
        let mut inner = self.0.borrow_mut();
        if want > inner.cap {
            return Err(Error::SymbolCap { cap: inner.cap });
        }
        let cap = inner.cap;
        let Inner { memo, gen, .. } = &mut *inner;
        while memo.len() < want {
            match gen {
                Gen::Finite => {
                    return Err(Error::FiniteWord { len: memo.len(), want });
                }
                Gen::FixedPoint { m, next } => {
                    if *next >= memo.len() {
                        return Err(Error::Internal(
                            "fixed point expansion consumed its own tail".into(),
                        ));
                    }
                    let l = memo[*next];
                    *next += 1;
                    let img = m.image(l);
                    if memo.len() + img.len() > cap {
                        return Err(Error::SymbolCap { cap });
                    }
                    memo.extend_from_slice(img.letters());
                }
                Gen::Image { m, base, pos } => match base.try_get(*pos)? {
                    Some(l) => {
                        *pos += 1;
                        let img = m.apply(&[l])?;
                        if memo.len() + img.len() > cap {
                            return Err(Error::SymbolCap { cap });
                        }
                        memo.extend_from_slice(img.letters());
                    }
                    None => {
                        *gen = Gen::Finite;
                    }
                },
                Gen::Periodic { pre, per } => {
                    let i = memo.len();
                    let l = if i < pre.len() {
                        pre[i]
                    } else {
                        per[(i - pre.len()) % per.len()]
                    };
                    memo.push(l);
                }
                Gen::Affix { pre, drop, base } => {
                    let i = memo.len();
                    if i < pre.len() {
                        memo.push(pre[i]);
                    } else {
                        match base.try_get(*drop + (i - pre.len()))? {
                            Some(l) => memo.push(l),
                            None => *gen = Gen::Finite,
                        }
                    }
                }
                Gen::Dynamic(src) => {
                    src.fill(memo, want)?;
                    if memo.len() < want {
                        return Err(Error::Internal(
                            "dynamic source failed to make progress".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for LazyWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let inner = self.0.borrow();
        write!(
            f,
            "LazyWord({} symbols materialized, cap {})",
            inner.memo.len(),
            inner.cap
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn sigma4() -> Alphabet {
        Alphabet::new(["0", "1", "2", "3"]).unwrap()
    }

    fn rs_f() -> Morphism {
        let a = sigma4();
        Morphism::from_rules(&a, &a, &[("0", "01"), ("1", "02"), ("2", "31"), ("3", "32")])
            .unwrap()
    }

    #[test]
    fn fixed_point_prefixes() {
        let a = sigma4();
        let u = LazyWord::fixed_point(&rs_f(), Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        assert_eq!(a.format_word(&u.prefix(16).unwrap()), "0102013101023202");

        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        assert_eq!(b.format_word(&d.prefix(4).unwrap()), "0100");

        let ch = Morphism::from_rules(&b, &b, &[("0", "0010"), ("1", "1")]).unwrap();
        let c = LazyWord::fixed_point(&ch, Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        assert_eq!(b.format_word(&c.prefix(4).unwrap()), "0010");
    }

    #[test]
    fn fixed_point_self_consistency() {
        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        for n in [1, 5, 32, 257] {
            let p = d.prefix(n).unwrap();
            let img = pd.apply(&p).unwrap();
            assert!(img.starts_with(&p), "f(prefix({n})) must begin with prefix({n})");
        }
    }

    #[test]
    fn coded_image_matches_paper_display() {
        let a = sigma4();
        let b = Alphabet::binary();
        let g = Morphism::from_rules(&a, &b, &[("0", "0"), ("1", "0"), ("2", "1"), ("3", "1")])
            .unwrap();
        let u = LazyWord::fixed_point(&rs_f(), Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        let w = LazyWord::coded(&g, &u).unwrap();
        assert_eq!(b.format_word(&w.prefix(16).unwrap()), "0001001000011101");
    }

    #[test]
    fn coded_identity_and_coding() {
        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        let id = Morphism::identity(&b);
        let same = LazyWord::coded(&id, &d).unwrap();
        assert_eq!(same.prefix(64).unwrap(), d.prefix(64).unwrap());

        // A coding on an extended alphabet, applied to a finite word.
        let ext = Alphabet::new(["b", "0", "1"]).unwrap();
        let tau =
            Morphism::from_rules(&ext, &b, &[("b", "1"), ("0", "0"), ("1", "1")]).unwrap();
        let w = ext.parse_word("b01").unwrap();
        let lw = LazyWord::coded(&tau, &LazyWord::finite(w)).unwrap();
        assert_eq!(b.format_word(&lw.prefix_up_to(10).unwrap()), "101");
        assert!(lw.try_get(3).unwrap().is_none());
    }

    #[test]
    fn coded_rejects_erasing() {
        let b = Alphabet::binary();
        let g = Morphism::from_rules(&b, &b, &[("0", "0"), ("1", "")]).unwrap();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        assert!(matches!(LazyWord::coded(&g, &d), Err(Error::ErasingImage(_))));
    }

    #[test]
    fn prefix_memoization_is_append_only() {
        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), DEFAULT_SYMBOL_CAP).unwrap();
        let p8 = d.prefix(8).unwrap();
        let p32 = d.prefix(32).unwrap();
        assert!(p32.starts_with(&p8));
        assert_eq!(d.prefix(8).unwrap(), p8, "repeated calls are identical");
    }

    #[test]
    fn symbol_cap_is_a_clean_error() {
        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), 64).unwrap();
        assert!(matches!(d.prefix(1000), Err(Error::SymbolCap { cap: 64 })));
    }

    #[test]
    fn periodic_and_affix() {
        let b = Alphabet::binary();
        let pre = b.parse_word("1").unwrap();
        let per = b.parse_word("01").unwrap();
        let w = LazyWord::periodic(pre, per).unwrap();
        assert_eq!(b.format_word(&w.prefix(7).unwrap()), "1010101");

        let base = LazyWord::periodic(Word::empty(), b.parse_word("01").unwrap()).unwrap();
        let v = LazyWord::affix(b.parse_word("11").unwrap(), 1, &base);
        assert_eq!(b.format_word(&v.prefix(6).unwrap()), "111010");
    }
}
