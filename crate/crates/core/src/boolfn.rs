//! Boolean functions as truth tables.
//!
//! Variable `j` of an `n`-ary function reads bit `n-1-j` of the input
//! index, so the first-named variable is the most significant bit, the
//! same convention as [`crate::statevec`].
//!
//! Expressions use switching-algebra notation: postfix `'` is NOT,
//! juxtaposition is AND, `+` is OR, with parentheses and the constants
//! `0` and `1`. `a'b' + c` reads as `(¬a ∧ ¬b) ∨ c`.

use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest arity accepted, matching the state-vector cap.
pub const MAX_ARITY: usize = crate::statevec::DEFAULT_QUBIT_CAP;

/// `a, b, c, ...` for up to 26 variables, `x0, x1, ...` beyond.
pub fn default_var_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|j| char::from(b'a' + j as u8).to_string())
            .collect()
    } else {
        (0..n).map(|j| format!("x{j}")).collect()
    }
}

/// A Boolean function on `n` inputs; bit `k` of the table is `f(k)`.
///
/// Equality is extensional: variable names are ignored.
#[derive(Debug, Clone)]
pub struct BoolFn {
    n: usize,
    table: BitVec,
    var_names: Vec<String>,
}

impl PartialEq for BoolFn {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for BoolFn {}

fn check_arity(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("a Boolean function needs at least one input"));
    }
    if n > MAX_ARITY {
        return Err(Error::ResourceLimit {
            what: "boolean function",
            requested: n,
            cap: MAX_ARITY,
        });
    }
    Ok(())
}

impl BoolFn {
    /// Wraps a raw truth table of length `2^n`.
    pub fn from_table(n: usize, table: BitVec) -> Result<Self> {
        check_arity(n)?;
        if table.len() != 1 << n {
            return Err(Error::domain(format!(
                "truth table for {n} inputs needs {} bits, got {}",
                1usize << n,
                table.len()
            )));
        }
        Ok(Self {
            n,
            table,
            var_names: default_var_names(n),
        })
    }

    /// The constant function.
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_arity(n)?;
        Self::from_table(n, BitVec::repeat(value, 1 << n))
    }

    /// True at exactly `k0`.
    pub fn needle(k0: usize, n: usize) -> Result<Self> {
        check_arity(n)?;
        if k0 >= 1 << n {
            return Err(Error::domain(format!(
                "needle index {k0} out of range 0..={}",
                (1usize << n) - 1
            )));
        }
        let mut table = BitVec::repeat(false, 1 << n);
        table.set(k0, true);
        Self::from_table(n, table)
    }

    /// True exactly on `indices`.
    pub fn from_minterms<I>(indices: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        check_arity(n)?;
        let mut table = BitVec::repeat(false, 1 << n);
        for k in indices {
            if k >= table.len() {
                return Err(Error::domain(format!(
                    "minterm {k} out of range 0..{}",
                    table.len()
                )));
            }
            table.set(k, true);
        }
        Self::from_table(n, table)
    }

    /// Compiles an expression over the given ordered variables.
    pub fn parse<S: AsRef<str>>(expr: &str, var_names: &[S]) -> Result<Self> {
        let names: Vec<String> = var_names.iter().map(|s| s.as_ref().to_owned()).collect();
        check_arity(names.len())?;
        for (j, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::domain(format!(
                    "{name:?} is not a valid variable name"
                )));
            }
            if names[..j].contains(name) {
                return Err(Error::domain(format!("variable {name:?} listed twice")));
            }
        }
        let ast = Parser::new(expr, &names).parse()?;
        let table = ast.compile(names.len());
        Ok(Self {
            n: names.len(),
            table,
            var_names: names,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &BitSlice {
        &self.table
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Replaces the variable names used for display.
    pub fn with_var_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::domain(format!(
                "{} names given for a function of {} inputs",
                names.len(),
                self.n
            )));
        }
        self.var_names = names;
        Ok(self)
    }

    pub fn evaluate(&self, k: usize) -> Result<bool> {
        self.table
            .get(k)
            .map(|b| *b)
            .ok_or_else(|| Error::domain(format!("input {k} out of range 0..{}", self.table.len())))
    }

    /// Inputs on which the function is true, ascending.
    pub fn truth_set(&self) -> Vec<usize> {
        self.table.iter_ones().collect()
    }

    pub fn count_ones(&self) -> usize {
        self.table.count_ones()
    }

    pub fn is_constant_false(&self) -> bool {
        self.table.not_any()
    }
}

impl fmt::Display for BoolFn {
    /// Sum-of-minterms form, e.g. `a'b'c' + a'b'c`; `0` when false.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant_false() {
            return write!(f, "0");
        }
        if self.table.all() {
            return write!(f, "1");
        }
        let sep = if self.var_names.iter().all(|v| v.len() == 1) {
            ""
        } else {
            " "
        };
        for (i, m) in self.table.iter_ones().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            for (j, name) in self.var_names.iter().enumerate() {
                if j > 0 {
                    write!(f, "{sep}")?;
                }
                let bit = (m >> (self.n - 1 - j)) & 1 == 1;
                write!(f, "{name}{}", if bit { "" } else { "'" })?;
            }
        }
        Ok(())
    }
}

/// Number of distinct Boolean functions of `n` inputs, `2^(2^n)`.
pub fn count_functions(n: usize) -> Result<BigUint> {
    if n > MAX_ARITY {
        return Err(Error::ResourceLimit {
            what: "function count",
            requested: n,
            cap: MAX_ARITY,
        });
    }
    Ok(BigUint::one() << (1usize << n))
}

/// The textual function forms accepted on the command line:
/// `expr:<expression>`, `minterms:<comma-list>` or `needle:<k0>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionSpec {
    Expr(String),
    Minterms(Vec<usize>),
    Needle(usize),
}

impl FunctionSpec {
    /// Builds the function at arity `n`; expressions use `var_names`.
    pub fn build(&self, n: usize, var_names: Option<&[String]>) -> Result<BoolFn> {
        match self {
            FunctionSpec::Expr(e) => {
                let defaults;
                let names = match var_names {
                    Some(v) => v,
                    None => {
                        defaults = default_var_names(n);
                        &defaults
                    }
                };
                if names.len() != n {
                    return Err(Error::Shape {
                        expected: n,
                        found: names.len(),
                    });
                }
                BoolFn::parse(e, names)
            }
            FunctionSpec::Minterms(m) => BoolFn::from_minterms(m.iter().copied(), n),
            FunctionSpec::Needle(k) => BoolFn::needle(*k, n),
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s.split_once(':').ok_or_else(|| {
            Error::domain(format!(
                "function spec {s:?} must look like expr:<e>, minterms:<list> or needle:<k>"
            ))
        })?;
        let int = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("{t:?} is not a basis index")))
        };
        match kind.trim() {
            "expr" => Ok(FunctionSpec::Expr(body.to_owned())),
            "minterms" => {
                let body = body.trim();
                if body.is_empty() {
                    return Ok(FunctionSpec::Minterms(Vec::new()));
                }
                body.split(',')
                    .map(int)
                    .collect::<Result<_>>()
                    .map(FunctionSpec::Minterms)
            }
            "needle" => int(body).map(FunctionSpec::Needle),
            other => Err(Error::domain(format!("unknown function kind {other:?}"))),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char)
}

/// Parsed expression; only lives until it is compiled to a table.
#[derive(Debug, Clone)]
enum Expr {
    Const(bool),
    Var(usize),
    Not(Box<Expr>),
    And(Vec<Expr>),
    Or(Vec<Expr>),
}

impl Expr {
    /// Evaluates over every assignment at once, one bit per input index.
    fn compile(&self, n: usize) -> BitVec {
        let len = 1usize << n;
        match self {
            Expr::Const(v) => BitVec::repeat(*v, len),
            Expr::Var(j) => {
                let shift = n - 1 - j;
                (0..len).map(|k| (k >> shift) & 1 == 1).collect()
            }
            Expr::Not(e) => !e.compile(n),
            Expr::And(terms) => {
                let mut acc = BitVec::repeat(true, len);
                for t in terms {
                    acc &= t.compile(n);
                }
                acc
            }
            Expr::Or(terms) => {
                let mut acc = BitVec::repeat(false, len);
                for t in terms {
                    acc |= t.compile(n);
                }
                acc
            }
        }
    }
}

// expr   := term ('+' term)*
// term   := factor factor*
// factor := atom '\''*
// atom   := ident | '0' | '1' | '(' expr ')'
struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, names: &'a [String]) -> Self {
        Self { src, pos: 0, names }
    }

    fn parse(mut self) -> Result<Expr> {
        let e = self.expr()?;
        self.skip_ws();
        match self.peek() {
            None => Ok(e),
            Some(')') => Err(Error::parse(self.pos, "unmatched ')'")),
            Some(c) => Err(Error::parse(self.pos, format!("unexpected {c:?}"))),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.peek() != Some('+') {
                break;
            }
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Or(terms)
        })
    }

    fn starts_factor(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c == '(' || c == '0' || c == '1' || is_ident_start(c))
    }

    fn term(&mut self) -> Result<Expr> {
        if !self.starts_factor() {
            return Err(match self.peek() {
                None => Error::parse(self.pos, "expression ends where an operand was expected"),
                Some(c) => Error::parse(self.pos, format!("expected an operand, found {c:?}")),
            });
        }
        let mut factors = Vec::new();
        while self.starts_factor() {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::And(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('\'') {
                return Ok(e);
            }
            self.pos += 1;
            e = Expr::Not(Box::new(e));
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(Error::parse(
                        self.pos,
                        format!("missing ')' for '(' at {start}"),
                    ));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some(c) if is_ident_start(c) => self.variable(),
            Some(c) => Err(Error::parse(start, format!("unexpected {c:?}"))),
            None => Err(Error::parse(start, "unexpected end of expression")),
        }
    }

    /// Longest declared name that prefixes the input; juxtaposed
    /// single-letter variables such as `ab` split into `a`, `b`.
    fn variable(&mut self) -> Result<Expr> {
        let rest = self.rest();
        let best = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, name)| rest.starts_with(name.as_str()))
            .max_by_key(|(_, name)| name.len());
        match best {
            Some((j, name)) => {
                self.pos += name.len();
                Ok(Expr::Var(j))
            }
            None => {
                let word: String = rest.chars().take_while(|&c| is_ident_char(c)).collect();
                Err(Error::parse(
                    self.pos,
                    format!("unknown identifier {word:?}"),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ABC: [&str; 3] = ["a", "b", "c"];

    #[test]
    fn needle_examples() {
        let f = BoolFn::needle(0, 3).unwrap();
        assert_eq!(f.table(), bits![1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(BoolFn::needle(5, 3).unwrap().truth_set(), vec![5]);
        assert_eq!(BoolFn::needle(0, 1).unwrap().table(), bits![1, 0]);
        assert!(matches!(BoolFn::needle(8, 3), Err(Error::Domain(_))));
        // the full index range is valid, including 2^n - 1
        assert_eq!(BoolFn::needle(7, 3).unwrap().truth_set(), vec![7]);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(BoolFn::parse("a'b'", &ABC).unwrap().truth_set(), vec![0, 1]);
        assert_eq!(BoolFn::parse("1", &["a"]).unwrap().truth_set(), vec![0, 1]);
        assert_eq!(
            BoolFn::parse("a+b'c", &ABC).unwrap().truth_set(),
            vec![1, 4, 5, 6, 7]
        );
    }

    #[test]
    fn parse_precedence_and_whitespace() {
        // NOT binds tighter than AND, AND tighter than OR
        let f = BoolFn::parse(" a b' + c ", &ABC).unwrap();
        let g = BoolFn::parse("(a(b'))+(c)", &ABC).unwrap();
        assert_eq!(f, g);
        // double negation and negated groups
        assert_eq!(
            BoolFn::parse("a''", &ABC).unwrap(),
            BoolFn::parse("a", &ABC).unwrap()
        );
        assert_eq!(
            BoolFn::parse("(a+b)'", &ABC).unwrap(),
            BoolFn::parse("a'b'", &ABC).unwrap()
        );
        assert!(BoolFn::parse("0", &ABC).unwrap().is_constant_false());
    }

    #[test]
    fn parse_multichar_names() {
        let names = ["x1", "x10", "y"];
        let f = BoolFn::parse("x10 x1'", &names).unwrap();
        // x1 = 0, x10 = 1, y free → indices 010, 011
        assert_eq!(f.truth_set(), vec![2, 3]);
        let g = BoolFn::parse("x10x1'", &names).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = BoolFn::parse("a'd", &ABC).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 2,
                message: "unknown identifier \"d\"".into()
            }
        );
        assert!(matches!(
            BoolFn::parse("a+", &ABC),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            BoolFn::parse("(a", &ABC),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            BoolFn::parse("a)", &ABC),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            BoolFn::parse("'a", &ABC),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            BoolFn::parse("", &ABC),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            BoolFn::parse("a*b", &ABC),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(BoolFn::parse("a", &["a", "a"]).is_err());
        assert!(BoolFn::parse("a", &["1x"]).is_err());
    }

    #[test]
    fn minterm_examples() {
        let f = BoolFn::from_minterms([0, 1], 3).unwrap();
        assert_eq!(f, BoolFn::parse("a'b'", &ABC).unwrap());
        assert!(BoolFn::from_minterms([], 2).unwrap().is_constant_false());
        assert_eq!(
            BoolFn::from_minterms(0..8, 3).unwrap(),
            BoolFn::constant(3, true).unwrap()
        );
        assert!(matches!(
            BoolFn::from_minterms([8], 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn evaluate_examples() {
        let f = BoolFn::needle(5, 3).unwrap();
        assert!(f.evaluate(5).unwrap());
        assert!(!f.evaluate(4).unwrap());
        assert!(f.evaluate(8).is_err());
        assert!(BoolFn::parse("a'b'", &ABC).unwrap().evaluate(1).unwrap());
    }

    #[test]
    fn function_counts() {
        assert_eq!(count_functions(0).unwrap(), BigUint::from(2u32));
        assert_eq!(count_functions(2).unwrap(), BigUint::from(16u32));
        assert_eq!(count_functions(3).unwrap(), BigUint::from(256u32));
        assert_eq!(count_functions(6).unwrap().bits(), 65);
        assert!(count_functions(MAX_ARITY + 1)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn arity_limits() {
        assert!(BoolFn::constant(0, true).is_err());
        assert!(BoolFn::needle(0, MAX_ARITY + 1)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn display_sum_of_minterms() {
        let f = BoolFn::parse("a'b'", &ABC).unwrap();
        assert_eq!(f.to_string(), "a'b'c' + a'b'c");
        assert_eq!(BoolFn::constant(2, false).unwrap().to_string(), "0");
        assert_eq!(BoolFn::constant(2, true).unwrap().to_string(), "1");
        let back = BoolFn::parse(&f.to_string(), &ABC).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn function_specs() {
        let s: FunctionSpec = "expr:a'b'".parse().unwrap();
        assert_eq!(s.build(3, None).unwrap().truth_set(), vec![0, 1]);
        let s: FunctionSpec = "minterms:".parse().unwrap();
        assert!(s.build(2, None).unwrap().is_constant_false());
        let s: FunctionSpec = "minterms:1, 3".parse().unwrap();
        assert_eq!(s, FunctionSpec::Minterms(vec![1, 3]));
        let s: FunctionSpec = "needle:5".parse().unwrap();
        assert_eq!(s.build(3, None).unwrap().truth_set(), vec![5]);
        assert!("needle:x".parse::<FunctionSpec>().is_err());
        assert!("table:1".parse::<FunctionSpec>().is_err());
        assert!("a'b'".parse::<FunctionSpec>().is_err());
        let s: FunctionSpec = "expr:x y'".parse().unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(s.build(2, Some(&names)).unwrap().truth_set(), vec![2]);
        assert!(matches!(s.build(3, Some(&names)), Err(Error::Shape { .. })));
    }
}
