//! Letter growth classification: mortal, bounded, and growing letters, the
//! mortality exponent, finite fixed points, and the two-case structure of
//! arbitrary infinite fixed points of an endomorphism.

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::lazy::LazyWord;
use crate::morphism::Morphism;
use crate::word::Word;

/// The growth classes of the letters of an endomorphism.
///
/// `mortal ⊆ bounded`, `bounded ∪ growing` is the whole alphabet, and the
/// two are disjoint. `mortality_exponent` is the least `t` with `f^t(b)`
/// empty for every mortal `b` (zero when there are no mortal letters).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterClasses {
    pub mortal: Vec<bool>,
    pub bounded: Vec<bool>,
    pub growing: Vec<bool>,
    pub mortality_exponent: usize,
}

impl LetterClasses {
    pub fn mortal_letters(&self) -> Vec<Letter> {
        collect(&self.mortal)
    }
    pub fn bounded_letters(&self) -> Vec<Letter> {
        collect(&self.bounded)
    }
    pub fn growing_letters(&self) -> Vec<Letter> {
        collect(&self.growing)
    }
    pub fn is_mortal_word(&self, w: &[Letter]) -> bool {
        w.iter().all(|l| self.mortal[l.index()])
    }
}

fn collect(flags: &[bool]) -> Vec<Letter> {
    flags
        .iter()
        .enumerate()
        .filter_map(|(i, b)| b.then_some(Letter(i as u32)))
        .collect()
}

/// Mortal letters as the least fixpoint of `M := { a : f(a) ∈ M* }`,
/// starting from the letters with empty images.
pub fn mortal_letters(m: &Morphism) -> Result<Vec<bool>> {
    if !m.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let size = m.source().size();
    let mut mortal = vec![false; size];
    loop {
        let mut changed = false;
        for a in m.source().letters() {
            if !mortal[a.index()]
                && m.image(a).letters().iter().all(|l| mortal[l.index()])
            {
                mortal[a.index()] = true;
                changed = true;
            }
        }
        if !changed {
            return Ok(mortal);
        }
    }
}

/// Computes the full letter classification.
///
/// A letter is growing exactly when, in the occurrence digraph restricted to
/// immortal letters, it reaches (in zero or more steps) a letter `d` that
/// lies on a directed cycle and whose image contains at least two immortal
/// letters counted with multiplicity. Counting only immortal letters matters:
/// mortal occurrences die out and contribute nothing in the long run.
pub fn classify(m: &Morphism) -> Result<LetterClasses> {
    let mortal = mortal_letters(m)?;
    let size = m.source().size();

    // Mortality exponent: the erasure depth is well-founded because mortal
    // letters cannot occur on a cycle among themselves.
    let mut depth = vec![0usize; size];
    let mut exponent = 0usize;
    for a in m.source().letters() {
        if mortal[a.index()] {
            let d = erase_depth(m, a, &mortal, &mut depth);
            exponent = exponent.max(d);
        }
    }

    // Immortal occurrence digraph.
    let immortal: Vec<Letter> = m
        .source()
        .letters()
        .filter(|l| !mortal[l.index()])
        .collect();
    let mut reach = vec![vec![false; size]; size]; // reach[a][b]: a reaches b in >= 1 step
    for &a in &immortal {
        for l in m.image(a).letters() {
            if !mortal[l.index()] {
                reach[a.index()][l.index()] = true;
            }
        }
    }
    // Transitive closure; alphabets are small.
    for &k in &immortal {
        for &i in &immortal {
            if reach[i.index()][k.index()] {
                for &j in &immortal {
                    if reach[k.index()][j.index()] {
                        reach[i.index()][j.index()] = true;
                    }
                }
            }
        }
    }

    let mut growing = vec![false; size];
    for &a in &immortal {
        for &d in &immortal {
            let reachable = a == d || reach[a.index()][d.index()];
            if !reachable || !reach[d.index()][d.index()] {
                continue;
            }
            let immortal_in_image = m
                .image(d)
                .letters()
                .iter()
                .filter(|l| !mortal[l.index()])
                .count();
            if immortal_in_image >= 2 {
                growing[a.index()] = true;
                break;
            }
        }
    }

    let bounded: Vec<bool> = growing.iter().map(|g| !g).collect();
    Ok(LetterClasses {
        mortal,
        bounded,
        growing,
        mortality_exponent: exponent,
    })
}

fn erase_depth(m: &Morphism, a: Letter, mortal: &[bool], memo: &mut Vec<usize>) -> usize {
    if memo[a.index()] != 0 {
        return memo[a.index()];
    }
    debug_assert!(mortal[a.index()]);
    let d = 1 + m
        .image(a)
        .letters()
        .iter()
        .map(|l| erase_depth(m, *l, mortal, memo))
        .max()
        .unwrap_or(0);
    memo[a.index()] = d;
    d
}

/// The finite fixed points of an endomorphism: for every anchor letter `a`
/// with `f(a) = x a y` and `x, y` mortal, the word `f^t(a)` (with `t` the
/// mortality exponent) satisfies `f(w) = w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFixedPoints {
    pub entries: Vec<(Letter, Word)>,
}

impl FiniteFixedPoints {
    /// Distinct fixed-point words, longest first (the parse order used by
    /// the fixed-point form classifier).
    pub fn words(&self) -> Vec<Word> {
        let mut ws: Vec<Word> = Vec::new();
        for (_, w) in &self.entries {
            if !ws.contains(w) {
                ws.push(w.clone());
            }
        }
        ws.sort_by_key(|w| std::cmp::Reverse(w.len()));
        ws
    }
}

pub fn finite_fixed_points(m: &Morphism, classes: &LetterClasses) -> Result<FiniteFixedPoints> {
    if !m.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let mut entries = Vec::new();
    for a in m.source().letters() {
        if anchor_split(m, classes, a).is_some() {
            let w = m.power_apply(&[a], classes.mortality_exponent)?;
            let back = m.apply(&w)?;
            if back != w {
                return Err(Error::Internal(format!(
                    "finite fixed point candidate for `{}` is not fixed",
                    m.source().token(a)
                )));
            }
            entries.push((a, w));
        }
    }
    Ok(FiniteFixedPoints { entries })
}

/// If `f(a) = x a y` with `x, y ∈ M*`, returns the split position of the
/// anchoring occurrence of `a`. Such a split exists exactly when the image
/// has a single immortal occurrence and it is `a` itself.
fn anchor_split(m: &Morphism, classes: &LetterClasses, a: Letter) -> Option<usize> {
    let img = m.image(a);
    let mut immortal_positions = img
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| !classes.mortal[l.index()]);
    match (immortal_positions.next(), immortal_positions.next()) {
        (Some((pos, l)), None) if *l == a => Some(pos),
        _ => None,
    }
}

/// If `f(a) = x a y` with `x ∈ M*` and `y ∉ M*`, returns `(x, y)`.
/// These anchors seed the non-periodic branch of infinite fixed points.
fn growing_anchor(m: &Morphism, classes: &LetterClasses, a: Letter) -> Option<(Word, Word)> {
    let img = m.image(a);
    for (pos, l) in img.letters().iter().enumerate() {
        if *l == a && classes.is_mortal_word(&img.letters()[..pos]) {
            let y = Word::from_letters(img.letters()[pos + 1..].to_vec());
            if !classes.is_mortal_word(&y) {
                return Some((Word::from_letters(img.letters()[..pos].to_vec()), y));
            }
        }
        if !classes.mortal[l.index()] && *l != a {
            // The first immortal letter is not `a`; no later occurrence of
            // `a` can have an all-mortal left part.
            return None;
        }
    }
    None
}

/// Structure of an infinite word `t` with `f(t) = t`, examined on a finite
/// prefix window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeadLandoForm {
    /// The window parses as a concatenation of finite fixed points.
    CaseA { parse: Vec<Word> },
    /// `t = w · f^{t-1}(x)⋯f(x)·x · a · y f(y) f²(y) ⋯` with `w` a product
    /// of finite fixed points and `f(a) = x a y`, `x` mortal, `y` not.
    /// `anchor_pos` is the index of the anchoring letter in `t`.
    CaseB {
        prefix: Vec<Word>,
        anchor: Letter,
        anchor_pos: usize,
    },
    /// Neither parse completed within the window.
    Undetermined { depth: usize },
}

/// Classifies the fixed-point structure of `t` under `m` on a window of
/// `depth` symbols. Errors if the window already contradicts `f(t) = t`.
pub fn classify_fixed_point_form(
    m: &Morphism,
    t: &LazyWord,
    depth: usize,
) -> Result<HeadLandoForm> {
    if !m.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let depth = depth.max(2);
    let prefix = t.prefix(depth)?;

    // Fixed-point consistency: f(prefix) must agree with t on the window.
    let image = m.apply(&prefix)?;
    let check_len = image.len().min(depth);
    if image.letters()[..check_len] != prefix.letters()[..check_len] {
        return Err(Error::Precondition(
            "word is provably not a fixed point: image of the prefix diverges from it".into(),
        ));
    }

    let classes = classify(m)?;
    let ffp = finite_fixed_points(m, &classes)?;
    let blocks = ffp.words();

    if !blocks.is_empty() && parse_as_blocks(prefix.letters(), &blocks) {
        let parse = greedy_block_parse(prefix.letters(), &blocks);
        return Ok(HeadLandoForm::CaseA { parse });
    }

    // Case B: positions reachable by a (possibly empty) product of finite
    // fixed points, then an anchor whose tail expansion matches the window.
    let reachable = block_parse_positions(prefix.letters(), &blocks, depth);
    let anchors: Vec<(Letter, Word, Word)> = m
        .source()
        .letters()
        .filter_map(|a| growing_anchor(m, &classes, a).map(|(x, y)| (a, x, y)))
        .collect();
    for pos in reachable {
        for (a, x, y) in &anchors {
            let mut bridge = Word::empty();
            for j in (1..classes.mortality_exponent).rev() {
                bridge.extend_from(&m.power_apply(x, j)?);
            }
            if classes.mortality_exponent >= 1 {
                bridge.extend_from(x);
            }
            bridge.push(*a);
            if pos + bridge.len() > depth {
                continue;
            }
            if prefix.letters()[pos..pos + bridge.len()] != *bridge.letters() {
                continue;
            }
            let tail_start = pos + bridge.len();
            if tail_matches_expansion(m, y, &prefix.letters()[tail_start..])? {
                return Ok(HeadLandoForm::CaseB {
                    prefix: greedy_block_parse(&prefix.letters()[..pos], &blocks),
                    anchor: *a,
                    anchor_pos: pos + bridge.len() - 1,
                });
            }
        }
    }

    Ok(HeadLandoForm::Undetermined { depth })
}

/// Does `window[tail..]` agree with `y f(y) f²(y) ⋯`?
fn tail_matches_expansion(m: &Morphism, y: &Word, window: &[Letter]) -> Result<bool> {
    let mut expected = Word::empty();
    let mut cur = y.clone();
    let mut guard = 0usize;
    while expected.len() < window.len() {
        expected.extend_from(&cur);
        cur = m.apply(&cur)?;
        guard += 1;
        if guard > window.len() + 2 {
            // y is immortal so each round contributes at least one symbol;
            // this is unreachable but keeps the loop total.
            return Err(Error::Internal("tail expansion failed to make progress".into()));
        }
    }
    Ok(expected.letters()[..window.len()] == *window)
}

/// Can the whole window be covered by the block set? The final block may
/// overhang the window as long as it agrees on the materialized part.
fn parse_as_blocks(window: &[Letter], blocks: &[Word]) -> bool {
    let mut stack = vec![0usize];
    let mut seen = vec![false; window.len() + 1];
    while let Some(pos) = stack.pop() {
        if pos == window.len() {
            return true;
        }
        if seen[pos] {
            continue;
        }
        seen[pos] = true;
        for b in blocks {
            let end = pos + b.len();
            if end <= window.len() {
                if window[pos..end] == *b.letters() {
                    stack.push(end);
                }
            } else if b.starts_with(&window[pos..]) {
                return true;
            }
        }
    }
    false
}

/// Greedy longest-match cover of `window` by blocks, used to report a parse.
/// Backtracks when the greedy choice dead-ends.
fn greedy_block_parse(window: &[Letter], blocks: &[Word]) -> Vec<Word> {
    fn go(window: &[Letter], pos: usize, blocks: &[Word], acc: &mut Vec<Word>) -> bool {
        if pos == window.len() {
            return true;
        }
        for b in blocks {
            let end = pos + b.len();
            let fits = end <= window.len() && window[pos..end] == *b.letters();
            let overhang = end > window.len() && b.starts_with(&window[pos..]);
            if fits || overhang {
                acc.push(b.clone());
                if overhang || go(window, end, blocks, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(window, 0, blocks, &mut acc);
    acc
}

/// All positions in the window reachable from 0 by concatenating blocks
/// fully contained in the window, in increasing order.
fn block_parse_positions(window: &[Letter], blocks: &[Word], depth: usize) -> Vec<usize> {
    let mut reach = vec![false; depth + 1];
    reach[0] = true;
    for pos in 0..=window.len() {
        if !reach[pos] {
            continue;
        }
        for b in blocks {
            let end = pos + b.len();
            if end <= window.len() && window[pos..end] == *b.letters() {
                reach[end] = true;
            }
        }
    }
    (0..=window.len()).filter(|p| reach[*p]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn chacon() -> (Alphabet, Morphism) {
        let a = Alphabet::binary();
        let m = Morphism::from_rules(&a, &a, &[("0", "0010"), ("1", "1")]).unwrap();
        (a, m)
    }

    #[test]
    fn classify_chacon() {
        let (a, m) = chacon();
        let c = classify(&m).unwrap();
        assert!(c.mortal_letters().is_empty());
        assert_eq!(c.mortality_exponent, 0);
        assert_eq!(c.growing_letters(), vec![a.letter("0").unwrap()]);
        assert_eq!(c.bounded_letters(), vec![a.letter("1").unwrap()]);
    }

    #[test]
    fn classify_period_doubling_all_growing() {
        let a = Alphabet::binary();
        let m = Morphism::from_rules(&a, &a, &[("0", "01"), ("1", "00")]).unwrap();
        let c = classify(&m).unwrap();
        assert!(c.mortal_letters().is_empty());
        assert_eq!(c.growing_letters().len(), 2);
        assert!(c.bounded_letters().is_empty());
    }

    #[test]
    fn classify_with_mortal_letter() {
        // a -> ab, b -> ε: b dies in one step, and the immortal cycle a -> a
        // carries only one immortal letter per image, so a is bounded.
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let m = Morphism::from_rules(&ab, &ab, &[("a", "ab"), ("b", "")]).unwrap();
        let c = classify(&m).unwrap();
        assert_eq!(c.mortal_letters(), vec![ab.letter("b").unwrap()]);
        assert_eq!(c.mortality_exponent, 1);
        assert!(c.growing_letters().is_empty());
        assert_eq!(c.bounded_letters().len(), 2);
    }

    #[test]
    fn classification_is_order_invariant() {
        // Same rules with the letters listed in the opposite order.
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let ba = Alphabet::new(["b", "a"]).unwrap();
        let m1 = Morphism::from_rules(&ab, &ab, &[("a", "ab"), ("b", "")]).unwrap();
        let m2 = Morphism::from_rules(&ba, &ba, &[("a", "ab"), ("b", "")]).unwrap();
        let c1 = classify(&m1).unwrap();
        let c2 = classify(&m2).unwrap();
        let growing1: Vec<&str> = c1.growing_letters().iter().map(|l| ab.token(*l)).collect();
        let growing2: Vec<&str> = c2.growing_letters().iter().map(|l| ba.token(*l)).collect();
        assert_eq!(growing1, growing2);
        assert_eq!(c1.mortality_exponent, c2.mortality_exponent);
    }

    #[test]
    fn mortality_exponent_is_minimal() {
        // b -> c -> ε needs two steps.
        let abc = Alphabet::new(["a", "b", "c"]).unwrap();
        let m =
            Morphism::from_rules(&abc, &abc, &[("a", "aab"), ("b", "c"), ("c", "")]).unwrap();
        let c = classify(&m).unwrap();
        assert_eq!(c.mortality_exponent, 2);
        for l in c.mortal_letters() {
            assert!(m.power_apply(&[l], 2).unwrap().is_empty());
        }
        assert!(!m.power_apply(&[abc.letter("b").unwrap()], 1).unwrap().is_empty());
    }

    #[test]
    fn finite_fixed_points_examples() {
        let (a, m) = chacon();
        let c = classify(&m).unwrap();
        let ffp = finite_fixed_points(&m, &c).unwrap();
        assert_eq!(ffp.entries.len(), 1);
        assert_eq!(ffp.entries[0].0, a.letter("1").unwrap());
        assert_eq!(a.format_word(&ffp.entries[0].1), "1");

        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let c = classify(&pd).unwrap();
        assert!(finite_fixed_points(&pd, &c).unwrap().entries.is_empty());

        let ab = Alphabet::new(["a", "b"]).unwrap();
        let m = Morphism::from_rules(&ab, &ab, &[("a", "ab"), ("b", "")]).unwrap();
        let c = classify(&m).unwrap();
        let ffp = finite_fixed_points(&m, &c).unwrap();
        assert_eq!(ffp.entries.len(), 1);
        assert_eq!(ab.format_word(&ffp.entries[0].1), "ab");
        assert_eq!(m.apply(&ffp.entries[0].1).unwrap(), ffp.entries[0].1);
    }

    #[test]
    fn fixed_point_form_case_a() {
        let (a, m) = chacon();
        let ones = LazyWord::periodic(Word::empty(), Word::single(a.letter("1").unwrap())).unwrap();
        match classify_fixed_point_form(&m, &ones, 32).unwrap() {
            HeadLandoForm::CaseA { parse } => {
                assert!(!parse.is_empty());
                assert!(parse.iter().all(|w| a.format_word(w) == "1"));
            }
            other => panic!("expected CaseA, got {other:?}"),
        }
    }

    #[test]
    fn fixed_point_form_case_b_with_mortals() {
        // a -> ab, b -> ε, c -> ca: the word c a ab ab ab ... is fixed and
        // anchored at c with a growing tail.
        let abc = Alphabet::new(["a", "b", "c"]).unwrap();
        let m =
            Morphism::from_rules(&abc, &abc, &[("a", "ab"), ("b", ""), ("c", "ca")]).unwrap();
        let t = LazyWord::fixed_point(&m, abc.letter("c").unwrap(), 1 << 20).unwrap();
        let p = t.prefix(20).unwrap();
        let img = m.apply(&p).unwrap();
        assert!(img.prefix_compatible(&p));
        match classify_fixed_point_form(&m, &t, 20).unwrap() {
            HeadLandoForm::CaseB { prefix, anchor, anchor_pos } => {
                assert!(prefix.is_empty());
                assert_eq!(anchor, abc.letter("c").unwrap());
                assert_eq!(anchor_pos, 0);
            }
            other => panic!("expected CaseB, got {other:?}"),
        }
    }

    #[test]
    fn fixed_point_form_case_b_pure_morphic() {
        let b = Alphabet::binary();
        let pd = Morphism::from_rules(&b, &b, &[("0", "01"), ("1", "00")]).unwrap();
        let d = LazyWord::fixed_point(&pd, Letter(0), 1 << 20).unwrap();
        match classify_fixed_point_form(&pd, &d, 64).unwrap() {
            HeadLandoForm::CaseB { prefix, anchor, anchor_pos } => {
                assert!(prefix.is_empty());
                assert_eq!(anchor, Letter(0));
                assert_eq!(anchor_pos, 0);
            }
            other => panic!("expected CaseB, got {other:?}"),
        }
    }

    #[test]
    fn fixed_point_form_rejects_non_fixed_words() {
        let (a, m) = chacon();
        let w = a.parse_word("01").unwrap();
        let not_fixed = LazyWord::periodic(Word::empty(), w).unwrap();
        assert!(classify_fixed_point_form(&m, &not_fixed, 32).is_err());
    }
}
