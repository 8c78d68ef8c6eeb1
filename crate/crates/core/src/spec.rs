//! Group spec strings such as `"Z4 x Z2"`, `"Q16"` or `"ZM(15,2,14)"`.
//!
//! ```text
//! atom := "Z" int | "D" int | "Q" int | "A" int | "S" int     (also "Z(12)")
//!       | "ZM(" int "," int "," int ")"
//! expr := atom ("x" atom)*
//! ```
//!
//! Whitespace is ignored and `x` is left-associative.

use std::fmt;

use thiserror::Error;

use crate::constructors::{
    direct_product, make_alternating, make_cyclic, make_dihedral, make_quaternion, make_symmetric,
    make_zm, ConstructError,
};
use crate::group::Group;
use crate::zm::validate_zm_triple;
use crate::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid atom {atom} at position {position}: {source}")]
    Parameter {
        position: usize,
        atom: String,
        source: ConstructError,
    },
    #[error("group order {order} exceeds the supported maximum of {max}", max = MAX_ORDER)]
    TooLarge { order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Generalized quaternion group of the given order.
    Quaternion(usize),
    Alternating(usize),
    Symmetric(usize),
    Zm(u64, u64, u64),
}

impl Atom {
    /// Order of the denoted group, checking the atom's parameter conditions.
    pub fn order(&self) -> Result<usize, ConstructError> {
        let factorial = |n: usize| (1..=n).product::<usize>();
        let range = |what, order: usize| {
            if (1..=MAX_ORDER).contains(&order) {
                Ok(order)
            } else {
                Err(ConstructError::OrderOutOfRange { what, order })
            }
        };
        match *self {
            Atom::Cyclic(n) => range("cyclic group", n),
            Atom::Dihedral(size) if size < 4 || size % 2 != 0 => {
                Err(ConstructError::BadDihedralSize(size))
            }
            Atom::Dihedral(size) => range("dihedral group", size),
            Atom::Quaternion(size) if size < 8 || !size.is_power_of_two() => {
                Err(ConstructError::BadQuaternionSize(size))
            }
            Atom::Quaternion(size) => range("quaternion group", size),
            Atom::Alternating(n) if !(3..=5).contains(&n) => Err(ConstructError::BadDegree {
                kind: "alternating",
                n,
                lo: 3,
                hi: 5,
            }),
            Atom::Alternating(n) => Ok(factorial(n) / 2),
            Atom::Symmetric(n) if !(2..=5).contains(&n) => Err(ConstructError::BadDegree {
                kind: "symmetric",
                n,
                lo: 2,
                hi: 5,
            }),
            Atom::Symmetric(n) => Ok(factorial(n)),
            Atom::Zm(m, n, r) => {
                let t = validate_zm_triple(m, n, r)?;
                let order = t.m.saturating_mul(t.n);
                range("ZM group", usize::try_from(order).unwrap_or(usize::MAX))
            }
        }
    }

    pub fn build(&self) -> Result<Group, ConstructError> {
        match *self {
            Atom::Cyclic(n) => make_cyclic(n),
            Atom::Dihedral(size) => make_dihedral(size),
            Atom::Quaternion(size) => make_quaternion(size),
            Atom::Alternating(n) => make_alternating(n),
            Atom::Symmetric(n) => make_symmetric(n),
            Atom::Zm(m, n, r) => make_zm(m, n, r),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Cyclic(n) => write!(f, "Z{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Quaternion(n) => write!(f, "Q{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Zm(m, n, r) => write!(f, "ZM({m},{n},{r})"),
        }
    }
}

/// Parsed expression tree: atoms combined by direct products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Atom(Atom),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Atom(a) => a.order().expect("atoms are validated when parsed"),
            GroupSpec::Product(l, r) => l.order() * r.order(),
        }
    }

    /// Atoms from left to right.
    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            GroupSpec::Atom(a) => vec![*a],
            GroupSpec::Product(l, r) => {
                let mut v = l.atoms();
                v.extend(r.atoms());
                v
            }
        }
    }

    pub fn product(self, other: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(self), Box::new(other))
    }

    /// Builds the group; its label is the normalized spec text.
    pub fn build(&self) -> Result<Group, ConstructError> {
        let group = match self {
            GroupSpec::Atom(a) => a.build()?,
            GroupSpec::Product(l, r) => direct_product(&l.build()?, &r.build()?)?,
        };
        Ok(group.with_label(self.to_string()))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Atom(a) => write!(f, "{a}"),
            GroupSpec::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Byte offset of the current token in the original text.
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn integer(&mut self) -> Result<u64, SpecError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => {
                    self.pos = start;
                    return self.error("integer too large");
                }
            };
            self.pos += 1;
        }
        if self.pos == start {
            return match self.peek() {
                Some(c) => self.error(format!("expected an integer, found '{c}'")),
                None => self.error("expected an integer, found end of input"),
            };
        }
        Ok(value)
    }

    /// `int` or `(int)`
    fn parameter(&mut self) -> Result<usize, SpecError> {
        let v = if self.eat('(') {
            let v = self.integer()?;
            self.expect(')')?;
            v
        } else {
            self.integer()?
        };
        Ok(usize::try_from(v).unwrap_or(usize::MAX))
    }

    fn atom(&mut self) -> Result<GroupSpec, SpecError> {
        let start = self.offset();
        let atom = match self.peek() {
            Some('Z') => {
                self.pos += 1;
                if self.eat('M') {
                    self.expect('(')?;
                    let m = self.integer()?;
                    self.expect(',')?;
                    let n = self.integer()?;
                    self.expect(',')?;
                    let r = self.integer()?;
                    self.expect(')')?;
                    Atom::Zm(m, n, r)
                } else {
                    Atom::Cyclic(self.parameter()?)
                }
            }
            Some(c @ ('D' | 'Q' | 'A' | 'S')) => {
                self.pos += 1;
                let v = self.parameter()?;
                match c {
                    'D' => Atom::Dihedral(v),
                    'Q' => Atom::Quaternion(v),
                    'A' => Atom::Alternating(v),
                    _ => Atom::Symmetric(v),
                }
            }
            Some(c) => {
                return self.error(format!(
                    "expected a group atom (Z, D, Q, A, S, ZM), found '{c}'"
                ))
            }
            None => return self.error("expected a group atom, found end of input"),
        };
        atom.order().map_err(|source| SpecError::Parameter {
            position: start,
            atom: atom.to_string(),
            source,
        })?;
        Ok(GroupSpec::Atom(atom))
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut parser = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        text,
    };
    let mut spec = parser.atom()?;
    while parser.eat('x') {
        let rhs = parser.atom()?;
        spec = spec.product(rhs);
        let order = spec
            .atoms()
            .iter()
            .map(|a| a.order().expect("validated"))
            .try_fold(1usize, |acc, o| acc.checked_mul(o))
            .unwrap_or(usize::MAX);
        if order > MAX_ORDER {
            return Err(SpecError::TooLarge { order });
        }
    }
    if let Some(c) = parser.peek() {
        return parser.error(format!("unexpected '{c}' after expression"));
    }
    Ok(spec)
}

/// Parses and builds in one step.
pub fn build_from_spec(text: &str) -> Result<Group, SpecError> {
    let spec = parse_group_spec(text)?;
    spec.build().map_err(|source| SpecError::Parameter {
        position: 0,
        atom: spec.to_string(),
        source,
    })
}
