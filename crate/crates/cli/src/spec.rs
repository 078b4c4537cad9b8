//! Line-oriented instance files.
//!
//! ```text
//! [field]
//! m = 4
//! [quiver]
//! vertices = 2
//! arrow a: 1 -> 2
//! arrow b: 2 -> 1
//! [relations]
//! a*b
//! b*a
//! [group]
//! generator phi order 4
//! maps e1 -> e2
//! maps e2 -> e1
//! maps a -> -b
//! maps b -> a
//! ```
//!
//! Words multiply like functions, so `a*b` is defined when `b` ends where `a`
//! starts. `e<k>` is the idempotent of vertex k. Scalars are rationals `p/q`,
//! roots of unity `zeta(k)^j`, products of those, or parenthesized sums.

use std::fmt;

use gsym_core::algebra::{
    build_algebra, build_group_action, images_to_matrix, Algebra, GroupAction, Path, Presentation,
};
use gsym_core::mat::{svec_axpy, SVec};
use gsym_core::{make_field, root_of_unity, Error, Field, Rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// One monomial `c · Π zeta(k)^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rat,
    pub roots: Vec<(u32, i64)>,
}

/// A sum of monomials, kept as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymScalar(pub Vec<Monomial>);

impl SymScalar {
    fn one() -> SymScalar {
        SymScalar(vec![Monomial { coeff: Rat::one(), roots: Vec::new() }])
    }

    fn mul(&self, o: &SymScalar) -> SymScalar {
        let mut out = Vec::new();
        for x in &self.0 {
            for y in &o.0 {
                let mut roots = x.roots.clone();
                roots.extend_from_slice(&y.roots);
                out.push(Monomial { coeff: x.coeff.mul(&y.coeff), roots });
            }
        }
        SymScalar(out)
    }

    fn neg(&self) -> SymScalar {
        SymScalar(self.0.iter().map(|m| Monomial { coeff: m.coeff.neg(), roots: m.roots.clone() }).collect())
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].coeff.is_one() && self.0[0].roots.is_empty()
    }

    pub fn eval(&self, f: &Field) -> Result<Scalar, Error> {
        let mut s = Scalar::zero(f);
        for m in &self.0 {
            let mut t = Scalar::from_rat(f, m.coeff.clone());
            for &(k, j) in &m.roots {
                t = t.mul(&root_of_unity(f, k, j)?);
            }
            s = s.add(&t);
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Idem(usize),
    Arrow(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: SymScalar,
    /// Product order; empty means the unit.
    pub word: Vec<Atom>,
}

pub type LinComb = Vec<Term>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub order: u32,
    pub maps: Vec<(Atom, LinComb)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InstanceSpec {
    pub m: Option<u32>,
    pub vertices: usize,
    pub arrows: Vec<(String, usize, usize)>,
    pub relations: Vec<LinComb>,
    pub truncate: Option<usize>,
    pub max_len: Option<usize>,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(&'static str),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ParseError { line, col, msg: format!("number {s} is too large") })?;
            toks.push((Tok::Num(n), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            toks.push((Tok::Sym("->"), col));
            i += 2;
        } else {
            let sym = match c {
                '+' => "+",
                '-' => "-",
                '*' => "*",
                '/' => "/",
                '^' => "^",
                '(' => "(",
                ')' => ")",
                ':' => ":",
                '=' => "=",
                _ => return Err(ParseError { line, col, msg: format!("unexpected character {c:?}") }),
            };
            toks.push((Tok::Sym(sym), col));
            i += 1;
        }
    }
    Ok(Lexer { toks, pos: 0, line, end_col: col0 + chars.len() })
}

impl Lexer {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line, col: self.col(), msg: msg.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(x)) if *x == s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected '{s}'"))
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) if x == k => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected '{k}'")),
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a number"),
        }
    }

    fn number_peek(&self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => Ok(*n),
            _ => self.err("expected a number"),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(x)) => {
                let x = x.clone();
                self.pos += 1;
                Ok(x)
            }
            _ => self.err("expected a name"),
        }
    }

    fn done(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            self.err("unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

fn small(l: &Lexer, n: u64) -> Result<i64, ParseError> {
    i64::try_from(n).or_else(|_| l.err("number is too large"))
}

fn idem_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('e')?;
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

struct Ctx<'a> {
    arrows: &'a [(String, usize, usize)],
    vertices: usize,
}

impl Ctx<'_> {
    fn atom(&self, l: &Lexer, name: &str) -> Result<Atom, ParseError> {
        if self.arrows.iter().any(|a| a.0 == name) {
            return Ok(Atom::Arrow(name.to_string()));
        }
        match idem_index(name) {
            Some(v) if (1..=self.vertices).contains(&v) => Ok(Atom::Idem(v - 1)),
            Some(_) => l.err(format!("vertex {name} is out of range")),
            None => l.err(format!("unknown arrow {name}")),
        }
    }
}

fn parse_combo(l: &mut Lexer, ctx: &Ctx) -> Result<LinComb, ParseError> {
    let mut out = Vec::new();
    let mut neg = l.eat("-");
    if !neg {
        l.eat("+");
    }
    loop {
        let mut t = parse_term(l, ctx)?;
        if neg {
            t.coeff = t.coeff.neg();
        }
        out.push(t);
        if l.eat("+") {
            neg = false;
        } else if l.eat("-") {
            neg = true;
        } else {
            return Ok(out);
        }
    }
}

fn parse_term(l: &mut Lexer, ctx: &Ctx) -> Result<Term, ParseError> {
    let mut coeff = SymScalar::one();
    let mut word = Vec::new();
    loop {
        match l.peek().cloned() {
            Some(Tok::Num(n)) => {
                l.pos += 1;
                let num = small(l, n)?;
                let den = if l.eat("/") {
                    let d = l.number_peek()?;
                    if d == 0 {
                        return l.err("zero denominator");
                    }
                    l.pos += 1;
                    small(l, d)?
                } else {
                    1
                };
                coeff = coeff.mul(&SymScalar(vec![Monomial { coeff: Rat::new(num, den), roots: Vec::new() }]));
            }
            Some(Tok::Ident(x)) if x == "zeta" => {
                l.pos += 1;
                l.expect("(")?;
                let k = u32::try_from(l.number_peek()?).or_else(|_| l.err("root order is too large"))?;
                if k == 0 {
                    return l.err("zeta(0) is undefined");
                }
                l.pos += 1;
                l.expect(")")?;
                let mut j = 1;
                if l.eat("^") {
                    let neg = l.eat("-");
                    let n = l.number()?;
                    j = small(l, n)?;
                    if neg {
                        j = -j;
                    }
                }
                coeff = coeff.mul(&SymScalar(vec![Monomial { coeff: Rat::one(), roots: vec![(k, j)] }]));
            }
            Some(Tok::Ident(x)) => {
                let a = ctx.atom(l, &x)?;
                l.pos += 1;
                word.push(a);
            }
            Some(Tok::Sym("(")) => {
                l.pos += 1;
                let inner = parse_combo(l, ctx)?;
                l.expect(")")?;
                if inner.iter().any(|t| !t.word.is_empty()) {
                    return l.err("parentheses may only contain scalars");
                }
                let sum = SymScalar(inner.into_iter().flat_map(|t| t.coeff.0).collect());
                coeff = coeff.mul(&sum);
            }
            _ => return l.err("expected a scalar or a word"),
        }
        if !l.eat("*") {
            return Ok(Term { coeff, word });
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Field,
    Quiver,
    Relations,
    Options,
    Group,
}

fn as_usize(l: &Lexer, n: u64) -> Result<usize, ParseError> {
    usize::try_from(n).or_else(|_| l.err("number is too large"))
}

pub fn parse_spec(text: &str) -> Result<InstanceSpec, ParseError> {
    let mut spec = InstanceSpec::default();
    let mut section = Section::None;
    let mut seen_quiver = false;
    let mut seen_vertices = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col0 = body.len() - body.trim_start().len() + 1;
        if let Some(name) = trimmed.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                return Err(ParseError { line, col: col0, msg: "unterminated section header".into() });
            };
            section = match name.trim() {
                "field" => Section::Field,
                "quiver" => {
                    seen_quiver = true;
                    Section::Quiver
                }
                "relations" => Section::Relations,
                "options" => Section::Options,
                "group" => Section::Group,
                other => return Err(ParseError { line, col: col0, msg: format!("unknown section [{other}]") }),
            };
            continue;
        }
        let mut l = lex(body.trim_start(), line, col0)?;
        if section == Section::None {
            return l.err("data before the first section header");
        }
        if !seen_quiver && section != Section::Field {
            return l.err("missing [quiver] section");
        }
        if section != Section::Field && section != Section::Quiver && !seen_vertices {
            return l.err("the [quiver] section must set vertices first");
        }
        match section {
            Section::Field => {
                l.keyword("m")?;
                l.expect("=")?;
                let m = l.number()?;
                if m == 0 || m > u32::MAX as u64 {
                    return l.err("conductor must be a positive integer");
                }
                spec.m = Some(m as u32);
            }
            Section::Quiver => match l.peek() {
                Some(Tok::Ident(x)) if x == "vertices" => {
                    l.pos += 1;
                    l.expect("=")?;
                    let n = l.number()?;
                    if n == 0 {
                        return l.err("need at least one vertex");
                    }
                    spec.vertices = as_usize(&l, n)?;
                    seen_vertices = true;
                }
                Some(Tok::Ident(x)) if x == "arrow" => {
                    if !seen_vertices {
                        return l.err("set vertices before listing arrows");
                    }
                    l.pos += 1;
                    let name = l.ident()?;
                    if name == "zeta" || idem_index(&name).is_some() {
                        return l.err(format!("{name} is reserved"));
                    }
                    if spec.arrows.iter().any(|a| a.0 == name) {
                        return l.err(format!("arrow {name} is defined twice"));
                    }
                    l.expect(":")?;
                    let mut ends = [0u64; 2];
                    for (k, end) in ends.iter_mut().enumerate() {
                        if k == 1 {
                            l.expect("->")?;
                        }
                        let v = l.number_peek()?;
                        if v == 0 || v as usize > spec.vertices {
                            return l.err(format!("vertex {v} is out of range"));
                        }
                        l.pos += 1;
                        *end = v;
                    }
                    let [s, t] = ends;
                    spec.arrows.push((name, s as usize - 1, t as usize - 1));
                }
                _ => return l.err("expected 'vertices' or 'arrow'"),
            },
            Section::Relations => {
                if matches!(l.peek(), Some(Tok::Ident(x)) if x == "truncate") {
                    l.pos += 1;
                    l.expect("=")?;
                    let n = l.number()?;
                    spec.truncate = Some(as_usize(&l, n)?);
                } else {
                    let ctx = Ctx { arrows: &spec.arrows, vertices: spec.vertices };
                    let c = parse_combo(&mut l, &ctx)?;
                    spec.relations.push(c);
                }
            }
            Section::Options => {
                l.keyword("max_len")?;
                l.expect("=")?;
                let n = l.number()?;
                spec.max_len = Some(as_usize(&l, n)?);
            }
            Section::Group => match l.peek() {
                Some(Tok::Ident(x)) if x == "generator" => {
                    l.pos += 1;
                    let name = l.ident()?;
                    l.keyword("order")?;
                    let n = l.number()?;
                    if n == 0 || n > u32::MAX as u64 {
                        return l.err("order must be a positive integer");
                    }
                    spec.generators.push(GeneratorSpec { name, order: n as u32, maps: Vec::new() });
                }
                Some(Tok::Ident(x)) if x == "maps" => {
                    l.pos += 1;
                    if spec.generators.is_empty() {
                        return l.err("'maps' before any generator");
                    }
                    let ctx = Ctx { arrows: &spec.arrows, vertices: spec.vertices };
                    let name = l.ident()?;
                    let src = ctx.atom(&l, &name)?;
                    l.expect("->")?;
                    let img = parse_combo(&mut l, &ctx)?;
                    let g = spec.generators.last_mut().unwrap();
                    if g.maps.iter().any(|m| m.0 == src) {
                        return l.err(format!("{name} is mapped twice"));
                    }
                    g.maps.push((src, img));
                }
                _ => return l.err("expected 'generator' or 'maps'"),
            },
            Section::None => unreachable!(),
        }
        l.done()?;
    }
    if !seen_quiver || !seen_vertices {
        return Err(ParseError { line: 1, col: 1, msg: "missing [quiver] section with vertices".into() });
    }
    Ok(spec)
}

fn fmt_rat(r: &Rat) -> String {
    format!("{r}")
}

fn fmt_monomial(m: &Monomial, first: bool) -> String {
    let neg = m.coeff.is_negative();
    let abs = if neg { m.coeff.neg() } else { m.coeff.clone() };
    let mut parts: Vec<String> = Vec::new();
    if !abs.is_one() || m.roots.is_empty() {
        parts.push(fmt_rat(&abs));
    }
    for (k, j) in &m.roots {
        parts.push(format!("zeta({k})^{j}"));
    }
    let body = parts.join("*");
    match (first, neg) {
        (true, true) => format!("-{body}"),
        (true, false) => body,
        (false, true) => format!(" - {body}"),
        (false, false) => format!(" + {body}"),
    }
}

fn fmt_scalar(s: &SymScalar) -> String {
    s.0.iter().enumerate().map(|(i, m)| fmt_monomial(m, i == 0)).collect()
}

fn fmt_word(w: &[Atom]) -> String {
    w.iter()
        .map(|a| match a {
            Atom::Idem(v) => format!("e{}", v + 1),
            Atom::Arrow(n) => n.clone(),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn fmt_combo(c: &LinComb) -> String {
    let mut out = String::new();
    for (i, t) in c.iter().enumerate() {
        let first = i == 0;
        let word = fmt_word(&t.word);
        if t.word.is_empty() {
            if t.coeff.0.len() == 1 {
                out.push_str(&fmt_monomial(&t.coeff.0[0], first));
            } else {
                out.push_str(if first { "" } else { " + " });
                out.push_str(&format!("({})", fmt_scalar(&t.coeff)));
            }
        } else if t.coeff.is_one() {
            out.push_str(if first { "" } else { " + " });
            out.push_str(&word);
        } else if t.coeff.0.len() == 1 {
            let m = &t.coeff.0[0];
            if m.coeff.neg().is_one() && m.roots.is_empty() {
                out.push_str(if first { "-" } else { " - " });
                out.push_str(&word);
            } else {
                out.push_str(&fmt_monomial(m, first));
                out.push('*');
                out.push_str(&word);
            }
        } else {
            out.push_str(if first { "" } else { " + " });
            out.push_str(&format!("({})*{}", fmt_scalar(&t.coeff), word));
        }
    }
    out
}

/// Canonical text; `parse_spec(&emit_spec(s)) == Ok(s)` for every parsed `s`.
pub fn emit_spec(spec: &InstanceSpec) -> String {
    let mut out = String::new();
    if let Some(m) = spec.m {
        out.push_str(&format!("[field]\nm = {m}\n"));
    }
    out.push_str(&format!("[quiver]\nvertices = {}\n", spec.vertices));
    for (n, s, t) in &spec.arrows {
        out.push_str(&format!("arrow {n}: {} -> {}\n", s + 1, t + 1));
    }
    if spec.truncate.is_some() || !spec.relations.is_empty() {
        out.push_str("[relations]\n");
        if let Some(t) = spec.truncate {
            out.push_str(&format!("truncate = {t}\n"));
        }
        for r in &spec.relations {
            out.push_str(&fmt_combo(r));
            out.push('\n');
        }
    }
    if let Some(n) = spec.max_len {
        out.push_str(&format!("[options]\nmax_len = {n}\n"));
    }
    if !spec.generators.is_empty() {
        out.push_str("[group]\n");
        for g in &spec.generators {
            out.push_str(&format!("generator {} order {}\n", g.name, g.order));
            for (src, img) in &g.maps {
                out.push_str(&format!("maps {} -> {}\n", fmt_word(std::slice::from_ref(src)), fmt_combo(img)));
            }
        }
    }
    out
}

impl InstanceSpec {
    /// The conductor: the `[field]` value, else the exponent of the group.
    pub fn conductor(&self) -> u32 {
        self.m.unwrap_or_else(|| self.generators.iter().fold(1u32, |acc, g| num_lcm(acc, g.order)))
    }

    fn path_of(&self, p: &Presentation, word: &[Atom]) -> Result<Option<Path>, Error> {
        let mut acc: Option<Path> = None;
        for a in word {
            let next = match a {
                Atom::Idem(v) => Path::trivial(*v),
                Atom::Arrow(n) => p.word(&[n.as_str()])?,
            };
            acc = match acc {
                None => Some(next),
                Some(q) => match q.compose(&next) {
                    Some(r) => Some(r),
                    None => return Ok(None),
                },
            };
        }
        Ok(acc)
    }

    fn terms(&self, p: &Presentation, c: &LinComb) -> Result<Vec<(Scalar, Path)>, Error> {
        let mut out = Vec::new();
        for t in c {
            let s = t.coeff.eval(&p.field)?;
            if t.word.is_empty() {
                for v in 0..self.vertices {
                    out.push((s.clone(), Path::trivial(v)));
                }
            } else if let Some(path) = self.path_of(p, &t.word)? {
                out.push((s, path));
            }
        }
        Ok(out)
    }

    fn element(&self, a: &Algebra, c: &LinComb) -> Result<SVec, Error> {
        let mut v: SVec = Vec::new();
        for (s, path) in self.terms(&a.pres, c)? {
            v = svec_axpy(&v, &s, &a.path_vec(&path));
        }
        Ok(v)
    }

    pub fn presentation(&self) -> Result<Presentation, Error> {
        let f = make_field(self.conductor())?;
        let mut p = Presentation::new(&f, self.vertices);
        for (n, s, t) in &self.arrows {
            p.arrow(n, *s, *t);
        }
        p.truncate = self.truncate;
        if let Some(n) = self.max_len {
            p.max_len = n;
        }
        let mut rels = Vec::new();
        for r in &self.relations {
            rels.push(self.terms(&p, r)?);
        }
        p.relations = rels;
        Ok(p)
    }

    pub fn build(&self) -> Result<(Algebra, GroupAction), Error> {
        let a = build_algebra(&self.presentation()?)?;
        if self.generators.is_empty() {
            let act = GroupAction::trivial(&a);
            return Ok((a, act));
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut idem = Vec::new();
            let mut arr = Vec::new();
            for (src, img) in &g.maps {
                let v = self.element(&a, img)?;
                match src {
                    Atom::Idem(k) => idem.push((*k, v)),
                    Atom::Arrow(n) => arr.push((self.arrows.iter().position(|x| &x.0 == n).unwrap(), v)),
                }
            }
            gens.push((g.order, images_to_matrix(&a, &idem, &arr)));
        }
        let act = build_group_action(&a, &gens)?;
        Ok((a, act))
    }
}

fn num_lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn term(word: Vec<Atom>, coeff: i64) -> Term {
    Term { coeff: SymScalar(vec![Monomial { coeff: Rat::int(coeff), roots: Vec::new() }]), word }
}

/// The truncated cyclic quiver on n vertices with the rotation.
pub fn cyclic_spec(n: usize) -> InstanceSpec {
    let arrows: Vec<(String, usize, usize)> = (0..n).map(|i| (format!("a{}", i + 1), i, (i + 1) % n)).collect();
    let mut maps: Vec<(Atom, LinComb)> =
        (0..n).map(|i| (Atom::Idem(i), vec![term(vec![Atom::Idem((i + 1) % n)], 1)])).collect();
    for i in 0..n {
        maps.push((Atom::Arrow(arrows[i].0.clone()), vec![term(vec![Atom::Arrow(arrows[(i + 1) % n].0.clone())], 1)]));
    }
    InstanceSpec {
        m: None,
        vertices: n,
        arrows,
        relations: Vec::new(),
        truncate: Some(n),
        max_len: None,
        generators: vec![GeneratorSpec { name: "g".into(), order: n as u32, maps }],
    }
}

/// Two vertices, `a: 1 -> 2`, `b: 2 -> 1`, `ab = ba = 0`, and the order-4
/// automorphism swapping the vertices with `a -> -b`, `b -> a`.
pub fn order_four_spec() -> InstanceSpec {
    let a = || Atom::Arrow("a".into());
    let b = || Atom::Arrow("b".into());
    InstanceSpec {
        m: Some(4),
        vertices: 2,
        arrows: vec![("a".into(), 0, 1), ("b".into(), 1, 0)],
        relations: vec![vec![term(vec![a(), b()], 1)], vec![term(vec![b(), a()], 1)]],
        truncate: None,
        max_len: None,
        generators: vec![GeneratorSpec {
            name: "phi".into(),
            order: 4,
            maps: vec![
                (Atom::Idem(0), vec![term(vec![Atom::Idem(1)], 1)]),
                (Atom::Idem(1), vec![term(vec![Atom::Idem(0)], 1)]),
                (a(), vec![term(vec![b()], -1)]),
                (b(), vec![term(vec![a()], 1)]),
            ],
        }],
    }
}
