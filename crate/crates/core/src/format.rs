//! The morphism text format and its extension for finite morphic
//! representations.
//!
//! ```text
//! alphabet: 0 1
//! rule 0 -> 0 1
//! rule 1 -> 0 0
//! seed: 0
//! ```
//!
//! Tokens are whitespace-separated; `#` begins a comment line. An empty rule
//! right side is forbidden unless erasing images are explicitly allowed.
//! Representation files append `prepend:`, `drop:`, `output:`, `coding`, and
//! `note:` lines after the base block.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::synth::{MorphicRep, RepNote};
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct ParseOptions {
    /// Permit `rule x ->` with an empty right side.
    pub allow_erasing: bool,
    /// Token prefix reserved for generated fresh letters; user alphabets may
    /// not start tokens with it. Empty disables the reservation.
    pub reserved_prefix: String,
}

impl Default for ParseOptions {
    fn default() -> ParseOptions {
        ParseOptions { allow_erasing: false, reserved_prefix: "@".into() }
    }
}

/// A parsed morphism file: the morphism plus the optional seed.
#[derive(Debug, Clone)]
pub struct MorphismFile {
    pub morphism: Morphism,
    pub seed: Option<Letter>,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn content_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| Line { number: i + 1, text: l.trim() })
        .filter(|l| !l.text.is_empty() && !l.text.starts_with('#'))
        .collect()
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses the base morphism format. Extension lines are rejected here; use
/// [`parse_rep_text`] for representation files.
pub fn parse_morphism_text(text: &str, opts: &ParseOptions) -> Result<MorphismFile> {
    let (file, rest) = parse_base(text, opts)?;
    if let Some(line) = rest.first() {
        return Err(parse_err(line.number, format!("unexpected line `{}`", line.text)));
    }
    Ok(file)
}

fn parse_base<'a>(text: &'a str, opts: &ParseOptions) -> Result<(MorphismFile, Vec<Line<'a>>)> {
    let lines = content_lines(text);
    let mut iter = lines.into_iter().peekable();

    let first = iter
        .next()
        .ok_or_else(|| parse_err(0, "empty file: expected `alphabet:` line"))?;
    let tokens: Vec<&str> = match first.text.strip_prefix("alphabet:") {
        Some(rest) => rest.split_whitespace().collect(),
        None => return Err(parse_err(first.number, "expected `alphabet: <tok> <tok> ...`")),
    };
    if !opts.reserved_prefix.is_empty() {
        if let Some(t) = tokens.iter().find(|t| t.starts_with(&opts.reserved_prefix)) {
            return Err(parse_err(
                first.number,
                format!("token `{t}` uses the reserved prefix `{}`", opts.reserved_prefix),
            ));
        }
    }
    let alphabet = Alphabet::new(tokens).map_err(|e| parse_err(first.number, e.to_string()))?;

    let mut images: Vec<Option<Word>> = vec![None; alphabet.size()];
    let mut seed = None;
    let mut rest = Vec::new();
    let mut seen_seed_line = false;
    for line in iter {
        if let Some(ruletext) = line.text.strip_prefix("rule ") {
            let (lhs, rhs) = ruletext
                .split_once("->")
                .ok_or_else(|| parse_err(line.number, "expected `rule <tok> -> <tok> ...`"))?;
            let lhs = lhs.trim();
            let l = alphabet
                .letter(lhs)
                .map_err(|_| parse_err(line.number, format!("unknown letter `{lhs}`")))?;
            if images[l.index()].is_some() {
                return Err(parse_err(line.number, format!("second rule for `{lhs}`")));
            }
            let mut img = Vec::new();
            for tok in rhs.split_whitespace() {
                img.push(alphabet.letter(tok).map_err(|_| {
                    parse_err(line.number, format!("unknown letter `{tok}` in image"))
                })?);
            }
            if img.is_empty() && !opts.allow_erasing {
                return Err(parse_err(
                    line.number,
                    format!("empty image for `{lhs}` (erasing images are not allowed here)"),
                ));
            }
            images[l.index()] = Some(Word::from_letters(img));
        } else if let Some(s) = line.text.strip_prefix("seed:") {
            if seen_seed_line {
                return Err(parse_err(line.number, "second `seed:` line"));
            }
            seen_seed_line = true;
            let tok = s.trim();
            seed = Some(
                alphabet
                    .letter(tok)
                    .map_err(|_| parse_err(line.number, format!("unknown seed `{tok}`")))?,
            );
        } else {
            rest.push(line);
        }
    }

    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            img.ok_or_else(|| parse_err(0, format!("no rule for letter `{}`", alphabet.tokens()[i])))
        })
        .collect::<Result<Vec<_>>>()?;
    let morphism = Morphism::new(alphabet.clone(), alphabet, images)?;
    Ok((MorphismFile { morphism, seed }, rest))
}

/// Prints a morphism in the exact file format; `parse ∘ print` is the
/// identity and `print ∘ parse` is the identity on canonically formatted
/// files.
pub fn print_morphism(m: &Morphism, seed: Option<Letter>) -> String {
    let a = m.source();
    let mut out = String::new();
    out.push_str("alphabet:");
    for t in a.tokens() {
        out.push(' ');
        out.push_str(t);
    }
    out.push('\n');
    for l in a.letters() {
        out.push_str("rule ");
        out.push_str(a.token(l));
        out.push_str(" ->");
        for c in m.image(l).letters() {
            out.push(' ');
            out.push_str(m.target().token(*c));
        }
        out.push('\n');
    }
    if let Some(s) = seed {
        out.push_str("seed: ");
        out.push_str(a.token(s));
        out.push('\n');
    }
    out
}

fn note_token(note: &RepNote) -> &'static str {
    match note {
        RepNote::FixedPointCase => "fixed-point",
        RepNote::LimitCase => "limit",
        RepNote::UltimatelyPeriodic => "ultimately-periodic",
    }
}

fn note_from_token(tok: &str, line: usize) -> Result<RepNote> {
    match tok {
        "fixed-point" => Ok(RepNote::FixedPointCase),
        "limit" => Ok(RepNote::LimitCase),
        "ultimately-periodic" => Ok(RepNote::UltimatelyPeriodic),
        _ => Err(parse_err(line, format!("unknown note `{tok}`"))),
    }
}

/// Prints a finite morphic representation: the generator block followed by
/// the extension lines.
pub fn print_rep(rep: &MorphicRep) -> String {
    let gen_alpha = rep.generator.source();
    let out_alpha = rep.coding.target();
    let mut out = print_morphism(&rep.generator, Some(rep.seed));
    out.push_str("prepend:");
    for l in rep.prepend.letters() {
        out.push(' ');
        out.push_str(out_alpha.token(*l));
    }
    out.push('\n');
    out.push_str(&format!("drop: {}\n", rep.drop));
    out.push_str("output:");
    for t in out_alpha.tokens() {
        out.push(' ');
        out.push_str(t);
    }
    out.push('\n');
    for l in gen_alpha.letters() {
        out.push_str("coding ");
        out.push_str(gen_alpha.token(l));
        out.push_str(" ->");
        for c in rep.coding.image(l).letters() {
            out.push(' ');
            out.push_str(out_alpha.token(*c));
        }
        out.push('\n');
    }
    out.push_str(&format!("note: {}\n", note_token(&rep.note)));
    out
}

/// Parses a representation file produced by [`print_rep`]. Fresh letters in
/// the generator alphabet are expected, so the reserved-prefix check is
/// disabled for the base block.
pub fn parse_rep_text(text: &str) -> Result<MorphicRep> {
    let opts = ParseOptions { allow_erasing: false, reserved_prefix: String::new() };
    let (file, rest) = parse_base(text, &opts)?;
    let seed = file
        .seed
        .ok_or_else(|| parse_err(0, "representation file must carry a `seed:` line"))?;
    let gen_alpha = file.morphism.source().clone();

    let mut prepend_toks: Option<Vec<String>> = None;
    let mut drop = None;
    let mut output: Option<Alphabet> = None;
    let mut coding_rules: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut note = None;
    for line in rest {
        if let Some(s) = line.text.strip_prefix("prepend:") {
            prepend_toks = Some(s.split_whitespace().map(String::from).collect());
        } else if let Some(s) = line.text.strip_prefix("drop:") {
            drop = Some(s.trim().parse::<usize>().map_err(|_| {
                parse_err(line.number, format!("bad drop count `{}`", s.trim()))
            })?);
        } else if let Some(s) = line.text.strip_prefix("output:") {
            output = Some(
                Alphabet::new(s.split_whitespace())
                    .map_err(|e| parse_err(line.number, e.to_string()))?,
            );
        } else if let Some(s) = line.text.strip_prefix("coding ") {
            let (lhs, rhs) = s
                .split_once("->")
                .ok_or_else(|| parse_err(line.number, "expected `coding <tok> -> <tok>`"))?;
            coding_rules.push((
                line.number,
                lhs.trim().to_string(),
                rhs.split_whitespace().map(String::from).collect(),
            ));
        } else if let Some(s) = line.text.strip_prefix("note:") {
            note = Some(note_from_token(s.trim(), line.number)?);
        } else {
            return Err(parse_err(line.number, format!("unexpected line `{}`", line.text)));
        }
    }

    let output = output.ok_or_else(|| parse_err(0, "missing `output:` line"))?;
    let mut images: Vec<Option<Word>> = vec![None; gen_alpha.size()];
    for (num, lhs, rhs) in coding_rules {
        let l = gen_alpha
            .letter(&lhs)
            .map_err(|_| parse_err(num, format!("unknown letter `{lhs}` in coding")))?;
        let mut img = Vec::new();
        for t in &rhs {
            img.push(
                output
                    .letter(t)
                    .map_err(|_| parse_err(num, format!("unknown output letter `{t}`")))?,
            );
        }
        if img.is_empty() {
            return Err(parse_err(num, "coding image must be non-empty"));
        }
        images[l.index()] = Some(Word::from_letters(img));
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, img)| {
            img.ok_or_else(|| parse_err(0, format!("no coding for `{}`", gen_alpha.tokens()[i])))
        })
        .collect::<Result<Vec<_>>>()?;
    let coding = Morphism::new(gen_alpha, output.clone(), images)?;

    let mut prepend = Vec::new();
    for t in prepend_toks.unwrap_or_default() {
        prepend.push(output.letter(&t)?);
    }
    Ok(MorphicRep {
        prepend: Word::from_letters(prepend),
        drop: drop.unwrap_or(0),
        seed,
        generator: file.morphism,
        coding,
        note: note.unwrap_or(RepNote::FixedPointCase),
    })
}
