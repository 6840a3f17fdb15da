//! Morphisms between free monoids, given by one image word per letter.

use crate::alphabet::{Alphabet, Letter};
use crate::classify::mortal_letters;
use crate::error::{Error, Result};
use crate::word::Word;

/// A morphism `source* -> target*`, determined by the images of the letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Morphism> {
        if images.len() != source.size() {
            return Err(Error::Precondition(format!(
                "{} images given for an alphabet of {} letters",
                images.len(),
                source.size()
            )));
        }
        for w in &images {
            for l in w.letters() {
                if !target.contains_index(*l) {
                    return Err(Error::LetterOutOfRange { index: l.index(), size: target.size() });
                }
            }
        }
        Ok(Morphism { source, target, images })
    }

    pub fn endomorphism(alphabet: Alphabet, images: Vec<Word>) -> Result<Morphism> {
        Morphism::new(alphabet.clone(), alphabet, images)
    }

    /// Convenience constructor from token rules, e.g. `[("0", "01"), ("1", "00")]`.
    /// Rules must cover every source letter exactly once.
    pub fn from_rules(source: &Alphabet, target: &Alphabet, rules: &[(&str, &str)]) -> Result<Morphism> {
        let mut images: Vec<Option<Word>> = vec![None; source.size()];
        for (tok, img) in rules {
            let l = source.letter(tok)?;
            if images[l.index()].is_some() {
                return Err(Error::Precondition(format!("two rules for letter `{tok}`")));
            }
            images[l.index()] = Some(target.parse_word(img)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| {
                    Error::Precondition(format!("no rule for letter `{}`", source.tokens()[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(source.clone(), target.clone(), images)
    }

    pub fn identity(alphabet: &Alphabet) -> Morphism {
        let images = alphabet.letters().map(Word::single).collect();
        Morphism {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, l: Letter) -> &Word {
        &self.images[l.index()]
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_non_erasing(&self) -> bool {
        self.images.iter().all(|w| !w.is_empty())
    }

    pub fn is_coding(&self) -> bool {
        self.images.iter().all(|w| w.len() == 1)
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Applies the morphism to a word: the concatenation of the images.
    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        let mut out = Vec::with_capacity(w.len() * self.max_image_len().max(1));
        for l in w {
            if !self.source.contains_index(*l) {
                return Err(Error::LetterOutOfRange { index: l.index(), size: self.source.size() });
            }
            out.extend_from_slice(self.images[l.index()].letters());
        }
        Ok(Word::from_letters(out))
    }

    /// `f^n(w)`; requires an endomorphism. `n = 0` returns `w`.
    pub fn power_apply(&self, w: &[Letter], n: usize) -> Result<Word> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        for l in w {
            if !self.source.contains_index(*l) {
                return Err(Error::LetterOutOfRange { index: l.index(), size: self.source.size() });
            }
        }
        let mut cur = Word::from_letters(w.to_vec());
        for _ in 0..n {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }

    /// `outer ∘ inner`: first `inner`, then `outer`.
    pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism> {
        if inner.target != outer.source {
            return Err(Error::AlphabetMismatch(
                "inner target differs from outer source".into(),
            ));
        }
        let images = inner
            .images
            .iter()
            .map(|w| outer.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(inner.source.clone(), outer.target.clone(), images)
    }

    /// `f^k` as a morphism; requires an endomorphism, `k >= 1`.
    pub fn power(&self, k: usize) -> Result<Morphism> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        if k == 0 {
            return Ok(Morphism::identity(&self.source));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = Morphism::compose(self, &acc)?;
        }
        Ok(acc)
    }

    /// `|f^n(a)|` for every letter `a`, computed by iterating the image
    /// length vector with saturating arithmetic.
    pub fn image_lengths_at(&self, n: usize) -> Result<Vec<u64>> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let mut lens: Vec<u64> = vec![1; self.source.size()];
        for _ in 0..n {
            lens = self.step_lengths(&lens);
        }
        Ok(lens)
    }

    /// One application of the length map: `len'(a) = Σ len(b)` over `b` in `f(a)`.
    pub fn step_lengths(&self, lens: &[u64]) -> Vec<u64> {
        self.images
            .iter()
            .map(|w| {
                w.letters()
                    .iter()
                    .fold(0u64, |acc, l| acc.saturating_add(lens[l.index()]))
            })
            .collect()
    }

    /// Letter occurrence counts of `f^n(a)` for a single letter, saturating.
    pub fn parikh_at(&self, a: Letter, n: usize) -> Result<Vec<u64>> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let size = self.source.size();
        let mut counts = vec![0u64; size];
        counts[a.index()] = 1;
        for _ in 0..n {
            let mut next = vec![0u64; size];
            for (b, c) in counts.iter().enumerate() {
                if *c == 0 {
                    continue;
                }
                for l in self.images[b].letters() {
                    next[l.index()] = next[l.index()].saturating_add(*c);
                }
            }
            counts = next;
        }
        Ok(counts)
    }

    /// True when `f(a) = a·x` with `x` non-empty and not entirely mortal,
    /// which is exactly the condition for the one-sided fixed point to exist.
    pub fn is_prolongable(&self, a: Letter) -> Result<bool> {
        Ok(self.prolongable_check(a).is_ok())
    }

    /// Like [`Morphism::is_prolongable`] but reports why the check fails.
    pub fn prolongable_check(&self, a: Letter) -> Result<()> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        if !self.source.contains_index(a) {
            return Err(Error::LetterOutOfRange { index: a.index(), size: self.source.size() });
        }
        let img = self.image(a);
        let token = self.source.token(a).to_string();
        if img.is_empty() || img[0] != a {
            return Err(Error::NotProlongable {
                letter: token,
                reason: "image does not begin with the letter itself".into(),
            });
        }
        if img.len() == 1 {
            return Err(Error::NotProlongable {
                letter: token,
                reason: "image is the letter alone, the fixed point would be a single letter".into(),
            });
        }
        let mortal = mortal_letters(self)?;
        let tail = &img.letters()[1..];
        if tail.iter().all(|l| mortal[l.index()]) {
            return Err(Error::NotProlongable {
                letter: token,
                reason: format!(
                    "tail `{}` is entirely mortal, the fixed point would be finite",
                    self.target.format_word(tail)
                ),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn pd() -> Morphism {
        let a = Alphabet::binary();
        Morphism::from_rules(&a, &a, &[("0", "01"), ("1", "00")]).unwrap()
    }

    fn chacon() -> Morphism {
        let a = Alphabet::binary();
        Morphism::from_rules(&a, &a, &[("0", "0010"), ("1", "1")]).unwrap()
    }

    #[test]
    fn apply_concatenates_images() {
        let a = Alphabet::binary();
        let f = pd();
        let w = a.parse_word("01").unwrap();
        assert_eq!(a.format_word(&f.apply(&w).unwrap()), "0100");
        assert_eq!(f.apply(&Word::empty()).unwrap(), Word::empty());

        // Direct concatenation oracle for a longer input.
        let f = chacon();
        let w = a.parse_word("0010").unwrap();
        let expected: String = ["0010", "0010", "1", "0010"].concat();
        assert_eq!(a.format_word(&f.apply(&w).unwrap()), expected);
    }

    #[test]
    fn power_apply_iterates() {
        let a = Alphabet::binary();
        let f = pd();
        let w = a.parse_word("0").unwrap();
        assert_eq!(a.format_word(&f.power_apply(&w, 3).unwrap()), "01000101");
        assert_eq!(f.power_apply(&w, 0).unwrap(), w);

        let f = chacon();
        let two = f.power_apply(&w, 2).unwrap();
        let by_hand = f.apply(&f.apply(&w).unwrap()).unwrap();
        assert_eq!(two, by_hand);
        assert_eq!(a.format_word(&two), "0010001010010");
    }

    #[test]
    fn power_apply_requires_endomorphism() {
        let a = Alphabet::binary();
        let b = Alphabet::new(["x"]).unwrap();
        let f = Morphism::from_rules(&a, &b, &[("0", "x"), ("1", "x")]).unwrap();
        let w = a.parse_word("0").unwrap();
        assert!(matches!(f.power_apply(&w, 2), Err(Error::NotEndomorphism)));
    }

    #[test]
    fn prolongable_examples() {
        let a = Alphabet::binary();
        assert!(pd().is_prolongable(Letter(0)).unwrap());
        let id = Morphism::identity(&a);
        assert!(!id.is_prolongable(Letter(0)).unwrap());

        let t = Alphabet::new(["0", "1", "2"]).unwrap();
        let f = Morphism::from_rules(&t, &t, &[("0", "010"), ("1", "21"), ("2", "211")]).unwrap();
        assert!(f.is_prolongable(t.letter("0").unwrap()).unwrap());
    }

    #[test]
    fn prolongable_rejects_mortal_tail_by_name() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let f = Morphism::from_rules(&ab, &ab, &[("a", "ab"), ("b", "")]).unwrap();
        match f.prolongable_check(ab.letter("a").unwrap()) {
            Err(Error::NotProlongable { letter, reason }) => {
                assert_eq!(letter, "a");
                assert!(reason.contains('b'), "reason should name the mortal tail: {reason}");
            }
            other => panic!("expected NotProlongable, got {other:?}"),
        }
    }

    #[test]
    fn compose_and_power() {
        let a = Alphabet::binary();
        let f = pd();
        let f2 = f.power(2).unwrap();
        let w = a.parse_word("0").unwrap();
        assert_eq!(f2.apply(&w).unwrap(), f.power_apply(&w, 2).unwrap());
        assert_eq!(a.format_word(f2.image(Letter(0))), "0100");
        assert_eq!(a.format_word(f2.image(Letter(1))), "0101");
    }

    #[test]
    fn image_lengths_saturate() {
        let f = pd();
        let lens = f.image_lengths_at(10).unwrap();
        assert_eq!(lens, vec![1024, 1024]);
    }
}
