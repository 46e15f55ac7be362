//! A small language for K-classes on `IGr(3,8)`, so manifests and the CLI
//! can name identities such as `L{E'(-2),E'(-1)}(T) = T(-2)`.
//!
//! ```text
//! expr  := ["-"] item (("+" | "-") item)*
//! item  := [uint "*"] atom
//! atom  := sigma                      bundle term, e.g. Sigma(3,1,0)(-2)*S^1
//!        | "[" complex "]"            alternating class of a named complex
//!        | ("L" | "R") "{" gen ("," gen)* "}" "(" expr ")"   mutation
//!        | "(" expr ")"
//!        | class ["(" int ")"]        T, F, G, T', ss(T), ...
//! gen   := "E(" int ")" | "E'(" int ")" | expr
//! ```
//!
//! `E(t)` and `E'(t)` are the five-object blocks twisted by `t`; they are
//! only meaningful as mutation or span generators.

use igr_core::ktheory::named::{self, CLASS_NAMES};
use igr_core::ktheory::{k_class_of_complex, KClass};
use igr_core::{k_mutate_left, k_mutate_right, BundleExpr, Context};

const X: Context = Context::IGR_3_8;

pub fn parse(src: &str) -> Result<KClass, String> {
    let mut p = Parser { src, pos: 0 };
    let class = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err("trailing input");
    }
    Ok(class.with_label(src.trim()))
}

/// A generator list entry: a block expands to its five classes.
pub fn parse_generator(src: &str) -> Result<Vec<KClass>, String> {
    let mut p = Parser { src, pos: 0 };
    let gens = p.gen()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err("trailing input");
    }
    Ok(gens)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, String> {
        Err(format!("column {}: {msg} in `{}`", self.pos + 1, self.src))
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), String> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(&format!("expected `{tok}`"))
        }
    }

    fn int(&mut self) -> Result<i64, String> {
        self.skip_ws();
        let r = self.rest();
        let sign = usize::from(r.starts_with('-') || r.starts_with('+'));
        let digits = r[sign..].chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return self.err("expected integer");
        }
        let v = r[..sign + digits].parse().or_else(|_| self.err("integer out of range"))?;
        self.pos += sign + digits;
        Ok(v)
    }

    fn expr(&mut self) -> Result<KClass, String> {
        let negate = self.eat("-");
        let mut acc = self.item()?;
        if negate {
            acc = acc.negate();
        }
        loop {
            if self.eat("+") {
                acc = acc.add(&self.item()?).map_err(|e| e.to_string())?;
            } else if self.eat("-") {
                acc = acc.sub(&self.item()?).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn item(&mut self) -> Result<KClass, String> {
        self.skip_ws();
        let digits = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if digits > 0 {
            let c = self.int()?;
            self.expect("*")?;
            return Ok(self.atom()?.scale(c));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<KClass, String> {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with("Sigma") {
            return self.sigma();
        }
        if self.eat("[") {
            let end = self.rest().find(']').map_or_else(|| self.err("unclosed `[`"), Ok)?;
            let name = self.rest()[..end].trim().to_string();
            self.pos += end + 1;
            let c = named::complex_by_name(&name).map_err(|e| e.to_string())?;
            return k_class_of_complex(&c).map_err(|e| e.to_string());
        }
        for (prefix, left) in [("L{", true), ("R{", false)] {
            if self.eat(prefix) {
                let mut block = self.gen()?;
                while self.eat(",") {
                    block.extend(self.gen()?);
                }
                self.expect("}")?;
                self.expect("(")?;
                let g = self.expr()?;
                self.expect(")")?;
                let out = if left {
                    k_mutate_left(&block, &g)
                } else {
                    k_mutate_right(&block, &g)
                };
                return out.map_err(|e| e.to_string());
            }
        }
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        self.class()
    }

    /// Hands the span of one bundle term to the core parser.
    fn sigma(&mut self) -> Result<KClass, String> {
        let start = self.pos;
        self.pos += "Sigma".len();
        self.expect("(")?;
        let close = self.rest().find(')').map_or_else(|| self.err("unclosed `(`"), Ok)?;
        self.pos += close + 1;
        let save = self.pos;
        if self.eat("(") {
            self.int()?;
            self.expect(")")?;
        } else {
            self.pos = save;
        }
        let save = self.pos;
        if self.eat("*") {
            if self.eat("S^") {
                self.int()?;
            } else {
                self.pos = save;
            }
        }
        let text = &self.src[start..self.pos];
        let e = BundleExpr::parse(X, text).map_err(|e| format!("{e} in `{text}`"))?;
        Ok(KClass::new(text, e))
    }

    fn class(&mut self) -> Result<KClass, String> {
        let r = self.rest();
        let mut names: Vec<&str> = CLASS_NAMES.to_vec();
        names.sort_by_key(|n| std::cmp::Reverse(n.len()));
        let Some(name) = names.into_iter().find(|n| r.starts_with(n)) else {
            return self.err("expected a class, bundle, complex or mutation");
        };
        self.pos += name.len();
        let class = named::class_by_name(name).map_err(|e| e.to_string())?;
        if self.rest().starts_with('(') {
            self.pos += 1;
            let t = self.int()?;
            self.expect(")")?;
            return Ok(class.twist(t));
        }
        Ok(class)
    }

    fn gen(&mut self) -> Result<Vec<KClass>, String> {
        for (prefix, block) in [
            ("E'(", named::block_e_prime as fn(i64) -> Vec<KClass>),
            ("E(", named::block_e),
        ] {
            if self.eat(prefix) {
                let t = self.int()?;
                self.expect(")")?;
                return Ok(block(t));
            }
        }
        Ok(vec![self.expr()?])
    }
}
