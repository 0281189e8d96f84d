//! Ring description strings such as `Z3xZ3@swap`.
//!
//! ```text
//! SPEC := BASE ('@' INV)?
//! BASE := ATOM ('x' ATOM)*          left-associative
//! ATOM := 'Z' INT | 'M' INT '(' BASE ')' | 'table:' PATH
//! INV  := 'id' | 'swap' | 'transpose' | 'file' | '(' INV ',' INV ')'
//! ```
//!
//! `PATH` is either double-quoted or runs up to whitespace, `@`, `)` or the
//! end of input. `file` selects the involution stored in a table file.

use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use starzd::ring::{
    build_matrix_ring, build_product, build_zn, validate_involution, FiniteRing, InvolutionError, InvolutionKind,
    RingError, StarRing, DEFAULT_ORDER_CAP,
};
use thiserror::Error;

use crate::tablefile::{read_table_file, TableFileError};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("incompatible involution: {0}")]
    IncompatibleInvolution(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Table(#[from] TableFileError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Zn(usize),
    Product(Box<BaseSpec>, Box<BaseSpec>),
    Matrix(usize, Box<BaseSpec>),
    Table(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvSpec {
    Id,
    Swap,
    Transpose,
    /// The permutation stored in a table file.
    File,
    Componentwise(Box<InvSpec>, Box<InvSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub base: BaseSpec,
    pub involution: Option<InvSpec>,
}

fn needs_quotes(path: &str) -> bool {
    path.is_empty() || path.chars().any(|c| c.is_whitespace() || c == '@' || c == ')' || c == '"')
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Zn(n) => write!(f, "Z{n}"),
            BaseSpec::Product(a, b) => write!(f, "{a}x{b}"),
            BaseSpec::Matrix(k, b) => write!(f, "M{k}({b})"),
            BaseSpec::Table(p) => {
                let p = p.display().to_string();
                if needs_quotes(&p) {
                    write!(f, "table:\"{p}\"")
                } else {
                    write!(f, "table:{p}")
                }
            }
        }
    }
}

impl fmt::Display for InvSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvSpec::Id => f.write_str("id"),
            InvSpec::Swap => f.write_str("swap"),
            InvSpec::Transpose => f.write_str("transpose"),
            InvSpec::File => f.write_str("file"),
            InvSpec::Componentwise(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if let Some(inv) = &self.involution {
            write!(f, "@{inv}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), SpecError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected `{token}`"))
        }
    }

    fn int(&mut self) -> Result<usize, SpecError> {
        self.skip_ws();
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.error("expected an integer");
        }
        let text = &self.rest()[..digits];
        let value = match text.parse::<usize>() {
            Ok(v) => v,
            Err(_) => return self.error(format!("integer `{text}` is too large")),
        };
        self.pos += digits;
        Ok(value)
    }

    fn path(&mut self) -> Result<PathBuf, SpecError> {
        if self.rest().starts_with('"') {
            let start = self.pos;
            let Some(end) = self.rest()[1..].find('"') else {
                self.pos = start;
                return self.error("unterminated quoted path");
            };
            let path = &self.rest()[1..1 + end];
            self.pos += end + 2;
            return Ok(PathBuf::from(path));
        }
        let len = self
            .rest()
            .find(|c: char| c.is_whitespace() || c == '@' || c == ')')
            .unwrap_or(self.rest().len());
        if len == 0 {
            return self.error("expected a path");
        }
        let path = &self.rest()[..len];
        self.pos += len;
        Ok(PathBuf::from(path))
    }

    fn atom(&mut self) -> Result<BaseSpec, SpecError> {
        if self.eat("table:") {
            return Ok(BaseSpec::Table(self.path()?));
        }
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                let n = self.int()?;
                if n == 0 {
                    return self.error("Z0 is not a finite ring");
                }
                Ok(BaseSpec::Zn(n))
            }
            Some('M') => {
                self.pos += 1;
                let k = self.int()?;
                if k == 0 {
                    return self.error("matrix size must be positive");
                }
                self.expect("(")?;
                let inner = self.base()?;
                self.expect(")")?;
                Ok(BaseSpec::Matrix(k, Box::new(inner)))
            }
            Some(c) => self.error(format!("unexpected `{c}`, expected Z, M or table:")),
            None => self.error("unexpected end of input, expected a ring"),
        }
    }

    fn base(&mut self) -> Result<BaseSpec, SpecError> {
        let mut left = self.atom()?;
        while self.eat("x") {
            let right = self.atom()?;
            left = BaseSpec::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn inv(&mut self) -> Result<InvSpec, SpecError> {
        if self.eat("(") {
            let a = self.inv()?;
            self.expect(",")?;
            let b = self.inv()?;
            self.expect(")")?;
            return Ok(InvSpec::Componentwise(Box::new(a), Box::new(b)));
        }
        for (word, inv) in [
            ("id", InvSpec::Id),
            ("swap", InvSpec::Swap),
            ("transpose", InvSpec::Transpose),
            ("file", InvSpec::File),
        ] {
            if self.eat(word) {
                return Ok(inv);
            }
        }
        self.error("expected id, swap, transpose, file or (INV,INV)")
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p = Parser { src: text, pos: 0 };
    let base = p.base()?;
    let involution = if p.eat("@") { Some(p.inv()?) } else { None };
    p.skip_ws();
    if p.pos != text.len() {
        return p.error("trailing input");
    }
    let spec = RingSpec { base, involution };
    if let Some(inv) = &spec.involution {
        check_shape(&spec.base, inv).map_err(SpecError::IncompatibleInvolution)?;
    }
    Ok(spec)
}

/// Syntactic compatibility of an involution with a ring expression.
fn check_shape(base: &BaseSpec, inv: &InvSpec) -> Result<(), String> {
    match (inv, base) {
        (InvSpec::Id, _) => Ok(()),
        (InvSpec::Swap, BaseSpec::Product(a, b)) if a == b => Ok(()),
        (InvSpec::Swap, _) => Err(format!("swap needs a product of identical factors, got {base}")),
        (InvSpec::Transpose, BaseSpec::Matrix(..)) => Ok(()),
        (InvSpec::Transpose, _) => Err(format!("transpose needs a matrix ring, got {base}")),
        (InvSpec::File, BaseSpec::Table(_)) => Ok(()),
        (InvSpec::File, _) => Err(format!("file needs a table ring, got {base}")),
        (InvSpec::Componentwise(x, y), BaseSpec::Product(a, b)) => {
            check_shape(a, x)?;
            check_shape(b, y)
        }
        (InvSpec::Componentwise(..), _) => Err(format!("componentwise involution needs a product, got {base}")),
    }
}

struct Built {
    ring: Arc<FiniteRing>,
    /// Involution stored with a table file.
    stored: Option<Vec<usize>>,
}

fn build_base(base: &BaseSpec) -> Result<Built, SpecError> {
    Ok(match base {
        BaseSpec::Zn(n) => Built {
            ring: Arc::new(build_zn(*n)),
            stored: None,
        },
        BaseSpec::Product(a, b) => Built {
            ring: Arc::new(build_product(build_base(a)?.ring, build_base(b)?.ring)),
            stored: None,
        },
        BaseSpec::Matrix(k, b) => Built {
            ring: Arc::new(build_matrix_ring(*k, build_base(b)?.ring, DEFAULT_ORDER_CAP)?),
            stored: None,
        },
        BaseSpec::Table(path) => {
            let file = read_table_file(path)?;
            Built {
                ring: Arc::new(file.build_ring(&base.to_string())?),
                stored: file.involution,
            }
        }
    })
}

fn involution_kind(inv: &InvSpec) -> InvolutionKind {
    match inv {
        InvSpec::Id => InvolutionKind::Identity,
        InvSpec::Swap => InvolutionKind::Swap,
        InvSpec::Transpose => InvolutionKind::Transpose,
        InvSpec::File => InvolutionKind::Custom("file".into()),
        InvSpec::Componentwise(a, b) => {
            InvolutionKind::Componentwise(Box::new(involution_kind(a)), Box::new(involution_kind(b)))
        }
    }
}

fn incompatible(e: InvolutionError) -> SpecError {
    SpecError::IncompatibleInvolution(e.to_string())
}

impl RingSpec {
    /// The involution this spec resolves to once defaults are applied.
    fn resolved(&self, built: &Built) -> Result<InvSpec, SpecError> {
        match &self.involution {
            Some(inv) => Ok(inv.clone()),
            None if built.stored.is_some() => Ok(InvSpec::File),
            None if built.ring.is_commutative() => Ok(InvSpec::Id),
            None => Err(SpecError::IncompatibleInvolution(format!(
                "{} is not commutative, so an involution must be given",
                built.ring.describe()
            ))),
        }
    }

    pub fn build(&self) -> Result<StarRing, SpecError> {
        let built = build_base(&self.base)?;
        let inv = self.resolved(&built)?;
        let kind = involution_kind(&inv);
        if inv == InvSpec::File {
            let Some(map) = &built.stored else {
                return Err(SpecError::IncompatibleInvolution("table file stores no involution".into()));
            };
            let star = validate_involution(&built.ring, map).map_err(incompatible)?;
            return Ok(StarRing::new(built.ring, star, kind));
        }
        StarRing::with_kind(built.ring, kind).map_err(incompatible)
    }

    /// This ring string with its default involution made explicit. Building it
    /// gives a ring whose description equals this string.
    pub fn canonical(&self) -> Result<String, SpecError> {
        let built = build_base(&self.base)?;
        Ok(format!("{}@{}", self.base, self.resolved(&built)?))
    }
}

/// Parses and builds in one step.
pub fn build_ring_spec(text: &str) -> Result<StarRing, SpecError> {
    parse_ring_spec(text)?.build()
}
