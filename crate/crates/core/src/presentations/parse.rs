//! Finitely presented groups and their text format.
//!
//! ```text
//! gens: A B R; rels: A^2=B^3, A^4=1, R^2=1, (R A)^2=1, (R B)^2=1
//! ```
//!
//! Powers use `^` with an optional sign, `'` inverts the preceding factor, and
//! parentheses group subwords. A relation `L=R` is stored as the relator
//! `L·R⁻¹`; a bare word (or `=1`) is a relator as written. Generator names
//! are matched greedily against the declared list, so `RA` reads as `R A`
//! unless `RA` itself is declared.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gl2z::Mat2;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    Gen(usize),
    Group(PresWord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Factor {
    atom: Atom,
    exp: i64,
}

/// A word over the generators of a presentation, with grouped powers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PresWord(Vec<Factor>);

impl PresWord {
    pub fn generator(index: usize, exp: i64) -> Self {
        PresWord(vec![Factor {
            atom: Atom::Gen(index),
            exp,
        }])
    }

    /// `self · other⁻¹`
    fn over(mut self, other: PresWord) -> PresWord {
        if !other.0.is_empty() {
            self.0.push(Factor {
                atom: Atom::Group(other),
                exp: -1,
            });
        }
        self
    }

    /// Signed exponent sum of every generator (the abelianized image).
    pub fn exponent_sums(&self, n_gens: usize) -> Vec<i64> {
        let mut out = vec![0i64; n_gens];
        self.accumulate(1, &mut out);
        out
    }

    fn accumulate(&self, scale: i64, out: &mut [i64]) {
        for f in &self.0 {
            match &f.atom {
                Atom::Gen(i) => out[*i] += scale * f.exp,
                Atom::Group(w) => w.accumulate(scale * f.exp, out),
            }
        }
    }

    /// Value under an assignment of matrices to generators.
    pub fn evaluate(&self, images: &[Mat2]) -> Mat2 {
        self.0.iter().fold(Mat2::identity(), |acc, f| {
            let base = match &f.atom {
                Atom::Gen(i) => images[*i].clone(),
                Atom::Group(w) => w.evaluate(images),
            };
            acc.multiply(&base.pow(f.exp))
        })
    }

    fn write(&self, names: &[String], out: &mut String) {
        if self.0.is_empty() {
            out.push('1');
            return;
        }
        for (k, f) in self.0.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            match &f.atom {
                Atom::Gen(i) => out.push_str(&names[*i]),
                Atom::Group(w) => {
                    out.push('(');
                    w.write(names, out);
                    out.push(')');
                }
            }
            if f.exp != 1 {
                out.push_str(&format!("^{}", f.exp));
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<PresWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<PresWord>) -> Result<Self> {
        let p = Presentation {
            generators,
            relators,
        };
        fn max_gen(w: &PresWord) -> Option<usize> {
            w.0.iter()
                .filter_map(|f| match &f.atom {
                    Atom::Gen(i) => Some(*i),
                    Atom::Group(g) => max_gen(g),
                })
                .max()
        }
        if p.relators
            .iter()
            .any(|r| max_gen(r).is_some_and(|i| i >= p.generators.len()))
        {
            return Err(Error::Parse(
                "relator references an undeclared generator".into(),
            ));
        }
        Ok(p)
    }

    /// `⟨A, B, R | A²=B³, A⁴=R²=(RA)²=(RB)²=1⟩`
    pub fn gl2z() -> Self {
        "gens: A B R; rels: A^2=B^3, A^4=1, R^2=1, (R A)^2=1, (R B)^2=1"
            .parse()
            .expect("built-in presentation")
    }

    /// `⟨A, B | A²=B³, A⁴=1⟩`
    pub fn sl2z() -> Self {
        "gens: A B; rels: A^2=B^3, A^4=1"
            .parse()
            .expect("built-in presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[PresWord] {
        &self.relators
    }

    /// Parses a single relation over this presentation's generators.
    pub fn parse_relator(&self, text: &str) -> Result<PresWord> {
        parse_relation(text, &self.generators)
    }

    pub fn with_relators(&self, extra: &[PresWord]) -> Presentation {
        let mut p = self.clone();
        p.relators.extend_from_slice(extra);
        p
    }

    /// Whether every relator evaluates to `I` under the given images.
    pub fn holds_under(&self, images: &[Mat2]) -> bool {
        assert_eq!(
            images.len(),
            self.generators.len(),
            "one image per generator"
        );
        self.relators
            .iter()
            .all(|r| r.evaluate(images).is_identity())
    }

    pub fn relator_to_string(&self, r: &PresWord) -> String {
        let mut s = String::new();
        r.write(&self.generators, &mut s);
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| self.relator_to_string(r))
            .collect();
        write!(
            f,
            "gens: {}; rels: {}",
            self.generators.join(" "),
            rels.join(", ")
        )
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (gens_part, rels_part) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected \"gens: ...; rels: ...\"".into()))?;
        let gens_text = gens_part
            .trim()
            .strip_prefix("gens:")
            .ok_or_else(|| Error::Parse("missing \"gens:\"".into()))?;
        let rels_text = rels_part
            .trim()
            .strip_prefix("rels:")
            .ok_or_else(|| Error::Parse("missing \"rels:\"".into()))?;

        let generators: Vec<String> = gens_text.split_whitespace().map(String::from).collect();
        for g in &generators {
            if g == "1" || !g.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("invalid generator name {g:?}")));
            }
        }
        let relators = rels_text
            .split(',')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| parse_relation(r, &generators))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(generators, relators)
    }
}

fn parse_relation(text: &str, gens: &[String]) -> Result<PresWord> {
    let mut sides = text.split('=');
    let lhs = sides.next().unwrap_or("");
    let rhs = sides.next();
    if sides.next().is_some() {
        return Err(Error::Parse(format!("more than one '=' in {text:?}")));
    }
    let left = Parser::new(lhs, gens).parse_all()?;
    Ok(match rhs {
        Some(r) => left.over(Parser::new(r, gens).parse_all()?),
        None => left,
    })
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    gens: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(text: &str, gens: &'a [String]) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            gens,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        let text: String = self.chars.iter().collect();
        Err(Error::Parse(format!(
            "{msg} at offset {} in {text:?}",
            self.pos
        )))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<PresWord> {
        let w = self.parse_word()?;
        if self.peek().is_some() {
            return self.err("unexpected character");
        }
        Ok(w)
    }

    fn parse_word(&mut self) -> Result<PresWord> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = if c == '(' {
                self.pos += 1;
                let inner = self.parse_word()?;
                if self.peek() != Some(')') {
                    return self.err("unbalanced parenthesis");
                }
                self.pos += 1;
                Some(Atom::Group(inner))
            } else if c == '1' {
                self.pos += 1;
                None
            } else {
                Some(Atom::Gen(self.parse_generator()?))
            };
            let exp = self.parse_suffix()?;
            if let Some(atom) = atom {
                if exp != 0 {
                    factors.push(Factor { atom, exp });
                }
            }
        }
        Ok(PresWord(factors))
    }

    fn parse_generator(&mut self) -> Result<usize> {
        let rest: String = self.chars[self.pos..].iter().collect();
        let best = self
            .gens
            .iter()
            .enumerate()
            .filter(|(_, g)| rest.starts_with(g.as_str()))
            .max_by_key(|(_, g)| g.len());
        match best {
            Some((i, g)) => {
                self.pos += g.chars().count();
                Ok(i)
            }
            None => self.err("unknown generator"),
        }
    }

    /// Any sequence of `^n` and `'` suffixes, multiplied together.
    fn parse_suffix(&mut self) -> Result<i64> {
        let mut exp = 1i64;
        loop {
            match self.chars.get(self.pos) {
                Some('\'') => {
                    self.pos += 1;
                    exp = -exp;
                }
                Some('^') => {
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    if matches!(self.chars.get(self.pos), Some('-' | '+')) {
                        self.pos += 1;
                    }
                    while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let digits: String = self.chars[start..self.pos].iter().collect();
                    let k: i64 = match digits.parse() {
                        Ok(k) => k,
                        Err(_) => return self.err("bad exponent"),
                    };
                    exp = match exp.checked_mul(k) {
                        Some(e) => e,
                        None => return self.err("exponent overflow"),
                    };
                }
                _ => return Ok(exp),
            }
        }
    }
}
