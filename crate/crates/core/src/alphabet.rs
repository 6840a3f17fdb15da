//! Alphabets of string tokens, letters as stable indices, and total orders.
//!
//! Letters are string tokens rather than single characters so that ordinary
//! alphabets like `{0, 1, 2, 3}` and extended alphabets carrying a fresh
//! synthesizer seed such as `@s` coexist without escaping rules.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// A letter is an index into its alphabet; indices are stable (0..size).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, ordered list of pairwise distinct letter tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Alphabet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(Error::Precondition("alphabet must have at least one letter".into()));
        }
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() || t.chars().any(char::is_whitespace) {
                return Err(Error::Precondition(format!(
                    "letter token `{t}` must be non-empty and free of whitespace"
                )));
            }
            if tokens[..i].iter().any(|s| s == t) {
                return Err(Error::Precondition(format!("duplicate letter token `{t}`")));
            }
        }
        Ok(Alphabet { tokens })
    }

    /// Binary `{0, 1}` alphabet, the most common case in tests and fixtures.
    pub fn binary() -> Alphabet {
        Alphabet::new(["0", "1"]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.tokens.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.tokens.len() as u32).map(Letter)
    }

    pub fn token(&self, l: Letter) -> &str {
        &self.tokens[l.index()]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn letter(&self, token: &str) -> Result<Letter> {
        self.tokens
            .iter()
            .position(|t| t == token)
            .map(|i| Letter(i as u32))
            .ok_or_else(|| Error::UnknownToken(token.to_string()))
    }

    pub fn contains_index(&self, l: Letter) -> bool {
        l.index() < self.tokens.len()
    }

    /// Parses a word: whitespace-separated tokens if any whitespace is
    /// present, otherwise one letter per character (which covers the common
    /// single-character alphabets). The empty string is the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        if s.chars().any(char::is_whitespace) {
            let mut letters = Vec::new();
            for tok in s.split_whitespace() {
                letters.push(self.letter(tok)?);
            }
            return Ok(Word::from_letters(letters));
        }
        // Single run of characters: prefer a whole-token match, then per-char.
        if let Ok(l) = self.letter(s) {
            return Ok(Word::from_letters(vec![l]));
        }
        let mut letters = Vec::new();
        for ch in s.chars() {
            letters.push(self.letter(&ch.to_string())?);
        }
        Ok(Word::from_letters(letters))
    }

    /// Renders a word using this alphabet's tokens. Single-character tokens
    /// are joined without separators; longer tokens are space-separated.
    pub fn format_word(&self, w: &[Letter]) -> String {
        let compact = self.tokens.iter().all(|t| t.chars().count() == 1);
        let mut out = String::new();
        for (i, l) in w.iter().enumerate() {
            if !compact && i > 0 {
                out.push(' ');
            }
            out.push_str(self.token(*l));
        }
        out
    }

    /// Returns this alphabet extended by one fresh letter whose token starts
    /// with `prefix`, together with the fresh letter.
    pub fn with_fresh(&self, prefix: &str) -> (Alphabet, Letter) {
        let mut token = format!("{prefix}s");
        let mut n = 0usize;
        while self.tokens.iter().any(|t| t == &token) {
            n += 1;
            token = format!("{prefix}s{n}");
        }
        let mut tokens = self.tokens.clone();
        tokens.push(token);
        let fresh = Letter(self.tokens.len() as u32);
        (Alphabet { tokens }, fresh)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.tokens.join(", "))
    }
}

/// Outcome of a lexicographic comparison. When one finite word is a proper
/// prefix of the other there is no order verdict; that case is reported
/// explicitly rather than folded into less/greater.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexCmp {
    Less,
    Equal,
    Greater,
    LeftIsProperPrefix,
    RightIsProperPrefix,
}

/// A total order on an alphabet, stored as a rank per letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalOrder {
    ranks: Vec<u32>,
}

impl TotalOrder {
    /// The order in which the alphabet lists its letters.
    pub fn natural(a: &Alphabet) -> TotalOrder {
        TotalOrder {
            ranks: (0..a.size() as u32).collect(),
        }
    }

    /// The reversal of this order.
    pub fn reversed(&self) -> TotalOrder {
        let max = self.ranks.len() as u32 - 1;
        TotalOrder {
            ranks: self.ranks.iter().map(|r| max - r).collect(),
        }
    }

    /// Builds the order `perm[0] < perm[1] < ...`; `perm` must list every
    /// letter of the alphabet exactly once.
    pub fn from_permutation(a: &Alphabet, perm: &[Letter]) -> Result<TotalOrder> {
        if perm.len() != a.size() {
            return Err(Error::Precondition(format!(
                "order lists {} letters, alphabet has {}",
                perm.len(),
                a.size()
            )));
        }
        let mut ranks = vec![u32::MAX; a.size()];
        for (rank, l) in perm.iter().enumerate() {
            if !a.contains_index(*l) {
                return Err(Error::LetterOutOfRange { index: l.index(), size: a.size() });
            }
            if ranks[l.index()] != u32::MAX {
                return Err(Error::Precondition(format!(
                    "letter `{}` listed twice in order",
                    a.token(*l)
                )));
            }
            ranks[l.index()] = rank as u32;
        }
        Ok(TotalOrder { ranks })
    }

    pub fn size(&self) -> usize {
        self.ranks.len()
    }

    #[inline]
    pub fn rank(&self, l: Letter) -> u32 {
        self.ranks[l.index()]
    }

    /// Letters from least to greatest.
    pub fn ascending(&self) -> Vec<Letter> {
        let mut letters: Vec<Letter> = (0..self.ranks.len() as u32).map(Letter).collect();
        letters.sort_by_key(|l| self.rank(*l));
        letters
    }

    #[inline]
    pub fn cmp_letters(&self, a: Letter, b: Letter) -> std::cmp::Ordering {
        self.rank(a).cmp(&self.rank(b))
    }

    /// Lexicographic comparison of two finite words.
    pub fn cmp_words(&self, x: &[Letter], y: &[Letter]) -> LexCmp {
        let n = x.len().min(y.len());
        for i in 0..n {
            match self.cmp_letters(x[i], y[i]) {
                std::cmp::Ordering::Less => return LexCmp::Less,
                std::cmp::Ordering::Greater => return LexCmp::Greater,
                std::cmp::Ordering::Equal => {}
            }
        }
        match x.len().cmp(&y.len()) {
            std::cmp::Ordering::Equal => LexCmp::Equal,
            std::cmp::Ordering::Less => LexCmp::LeftIsProperPrefix,
            std::cmp::Ordering::Greater => LexCmp::RightIsProperPrefix,
        }
    }

    /// Renders the order as `a<b<c` using the alphabet's tokens.
    pub fn format(&self, a: &Alphabet) -> String {
        self.ascending()
            .iter()
            .map(|l| a.token(*l).to_string())
            .collect::<Vec<_>>()
            .join("<")
    }
}

/// Parses an order string such as `0<1<2<3`; every token of the alphabet
/// must appear exactly once.
pub fn parse_order(s: &str, a: &Alphabet) -> Result<TotalOrder> {
    let mut perm = Vec::new();
    for (pos, tok) in s.split('<').enumerate() {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(Error::Precondition(format!(
                "empty token at position {pos} in order `{s}`"
            )));
        }
        perm.push(a.letter(tok).map_err(|_| {
            Error::Precondition(format!("unknown token `{tok}` at position {pos} in order `{s}`"))
        })?);
    }
    if perm.len() != a.size() {
        return Err(Error::Precondition(format!(
            "order `{s}` lists {} letters, alphabet {a} has {}",
            perm.len(),
            a.size()
        )));
    }
    TotalOrder::from_permutation(a, &perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_duplicates_and_whitespace() {
        assert!(Alphabet::new(["0", "0"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn parse_word_per_character_and_tokens() {
        let a = Alphabet::new(["0", "1", "2", "3"]).unwrap();
        let w = a.parse_word("0102").unwrap();
        assert_eq!(a.format_word(w.letters()), "0102");
        let spaced = a.parse_word("0 1 0 2").unwrap();
        assert_eq!(w, spaced);
        assert!(a.parse_word("07").is_err());
    }

    #[test]
    fn order_parsing_and_comparison() {
        let a = Alphabet::binary();
        let rho = parse_order("0<1", &a).unwrap();
        let rho_bar = parse_order("1<0", &a).unwrap();
        assert_eq!(rho_bar, rho.reversed());

        let x = a.parse_word("0001").unwrap();
        let y = a.parse_word("0010").unwrap();
        assert_eq!(rho.cmp_words(x.letters(), y.letters()), LexCmp::Less);

        let x = a.parse_word("10").unwrap();
        let y = a.parse_word("01").unwrap();
        assert_eq!(rho_bar.cmp_words(x.letters(), y.letters()), LexCmp::Less);

        let x = a.parse_word("01").unwrap();
        let y = a.parse_word("010").unwrap();
        assert_eq!(rho.cmp_words(x.letters(), y.letters()), LexCmp::LeftIsProperPrefix);
    }

    #[test]
    fn order_requires_every_letter_once() {
        let a = Alphabet::new(["0", "1", "2"]).unwrap();
        assert!(parse_order("0<1", &a).is_err());
        assert!(parse_order("0<1<1", &a).is_err());
        assert!(parse_order("0<1<2<2", &a).is_err());
    }

    #[test]
    fn fresh_letter_avoids_collisions() {
        let a = Alphabet::new(["@s", "0"]).unwrap();
        let (ext, fresh) = a.with_fresh("@");
        assert_eq!(ext.size(), 3);
        assert_eq!(ext.token(fresh), "@s1");
    }
}
