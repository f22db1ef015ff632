//! Plain-text algebra/module documents.
//!
//! ```text
//! # heis3 with one character
//! algebra dim=3 basis=x,y,z
//! bracket 0 1 2 1
//! module name=chi dim=1
//! act x
//! 1
//! act y
//! 0
//! act z
//! 0
//! family adequate=no
//! member chi claim=irreducible
//! ```
//!
//! `bracket i j k c` means `[e_i, e_j]` contains `c * e_k`, with `i < j`
//! and 0-based indices. Each `act` line is followed by the rows of that
//! basis element's matrix. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, Matrix, Scalar};
use crate::liealg::LieAlgebra;
use crate::repmod::{sl2_irreducible_on, Representation, TwistSign};

/// Module names resolved without a `module` section.
pub const BUILTIN_MODULES: [&str; 3] = ["K", "adjoint", "K^-tw"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub algebra: LieAlgebra,
    pub modules: Vec<ModuleSection>,
    pub family: Option<FamilySection>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSection {
    pub name: String,
    pub dim: usize,
    /// One matrix per algebra basis element, in basis order.
    pub action: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySection {
    pub adequate: bool,
    pub members: Vec<MemberEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberEntry {
    pub name: String,
    /// External irreducibility claim, if any.
    pub claim: Option<bool>,
}

impl InputDocument {
    pub fn from_algebra(algebra: LieAlgebra) -> Self {
        Self {
            algebra,
            modules: Vec::new(),
            family: None,
        }
    }

    /// Resolves a module by name. Besides the declared modules this
    /// accepts `K`, `adjoint`, `K^-tw`, characters `chi(v_0,...,v_{n-1})`
    /// given by their values on the basis, and `V(m)` when the algebra has
    /// the `sl2` table.
    pub fn module(&self, algebra: &Arc<LieAlgebra>, name: &str) -> Result<Representation> {
        if let Some(m) = self.modules.iter().find(|m| m.name == name) {
            return Ok(
                Representation::new(algebra.clone(), m.dim, m.action.clone())?.with_label(name),
            );
        }
        match name {
            "K" => return Ok(Representation::trivial(algebra.clone(), 1)),
            "adjoint" => return Ok(Representation::adjoint(algebra.clone())),
            "K^-tw" => {
                return Ok(Representation::trivial(algebra.clone(), 1)
                    .twist(TwistSign::Plus)
                    .with_label("K^-tw"))
            }
            _ => {}
        }
        if let Some(args) = name.strip_prefix("chi(").and_then(|r| r.strip_suffix(')')) {
            let values = if args.trim().is_empty() {
                Vec::new()
            } else {
                args.split(',')
                    .map(|a| parse_rational(a.trim()))
                    .collect::<Result<Vec<Scalar>>>()?
            };
            if values.len() != algebra.dim() {
                return Err(Error::Shape(format!(
                    "{name} has {} values, the algebra has dimension {}",
                    values.len(),
                    algebra.dim()
                )));
            }
            return Representation::character(algebra.clone(), &values);
        }
        if let Some(m) = name.strip_prefix("V(").and_then(|r| r.strip_suffix(')')) {
            let m: usize = m
                .trim()
                .parse()
                .map_err(|_| Error::Lookup(format!("bad highest weight in {name:?}")))?;
            return sl2_irreducible_on(algebra.clone(), m);
        }
        Err(Error::Lookup(format!("no module named {name:?}")))
    }
}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices().chain([(line.len(), ' ')]) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    column: line[..s].chars().count() + 1,
                    text: &line[s..pos],
                });
                start = None;
            }
            (false, None) => start = Some(pos),
            _ => {}
        }
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn semantic(line: usize, message: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("line {line}: {message}"))
}

fn rational(line: usize, tok: &Token<'_>) -> Result<Scalar> {
    parse_rational(tok.text).map_err(|e| match e {
        Error::Syntax {
            column, message, ..
        } => syntax(line, tok.column + column - 1, message),
        other => other,
    })
}

fn index(line: usize, tok: &Token<'_>) -> Result<usize> {
    tok.text.parse().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("expected an index, found {:?}", tok.text),
        )
    })
}

/// `key=value` fields after a keyword. Unknown or repeated keys are errors.
fn fields<'a>(
    line: usize,
    toks: &[Token<'a>],
    allowed: &[&str],
) -> Result<Vec<(&'a str, &'a str, usize)>> {
    let mut out: Vec<(&str, &str, usize)> = Vec::new();
    for tok in toks {
        let Some((key, value)) = tok.text.split_once('=') else {
            return Err(syntax(
                line,
                tok.column,
                format!("expected key=value, found {:?}", tok.text),
            ));
        };
        if !allowed.contains(&key) {
            return Err(syntax(line, tok.column, format!("unknown field {key:?}")));
        }
        if out.iter().any(|(k, _, _)| *k == key) {
            return Err(syntax(line, tok.column, format!("repeated field {key:?}")));
        }
        out.push((key, value, tok.column + key.len() + 1));
    }
    Ok(out)
}

fn field<'a>(fs: &[(&'a str, &'a str, usize)], key: &str) -> Option<(&'a str, usize)> {
    fs.iter()
        .find(|(k, _, _)| *k == key)
        .map(|&(_, v, c)| (v, c))
}

fn count(line: usize, value: &str, column: usize) -> Result<usize> {
    value.parse().map_err(|_| {
        syntax(
            line,
            column,
            format!("expected a dimension, found {value:?}"),
        )
    })
}

fn is_module_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '.' | '-' | '^'))
}

#[derive(PartialEq)]
enum Section {
    Algebra,
    Module,
    Family,
}

struct PendingModule {
    line: usize,
    name: String,
    dim: usize,
    action: Vec<Option<Matrix>>,
    /// Basis index and rows read so far for the current `act` block.
    current: Option<(usize, usize, Vec<Vec<Scalar>>)>,
}

impl PendingModule {
    fn close_block(&mut self, line: usize) -> Result<()> {
        if let Some((basis, start, rows)) = self.current.take() {
            if rows.len() != self.dim {
                return Err(semantic(
                    line,
                    format!(
                        "act block starting on line {start} has {} rows, expected {}",
                        rows.len(),
                        self.dim
                    ),
                ));
            }
            let m = if self.dim == 0 {
                Matrix::zeros(0, 0)
            } else {
                Matrix::from_rows(rows).expect("row lengths checked while reading")
            };
            self.action[basis] = Some(m);
        }
        Ok(())
    }

    fn finish(mut self, line: usize, algebra: &LieAlgebra) -> Result<ModuleSection> {
        self.close_block(line)?;
        let mut action = Vec::with_capacity(self.action.len());
        for (i, m) in self.action.into_iter().enumerate() {
            match m {
                Some(m) => action.push(m),
                None => {
                    return Err(semantic(
                        self.line,
                        format!(
                            "module {} has no act block for {}",
                            self.name,
                            algebra.names()[i]
                        ),
                    ))
                }
            }
        }
        Ok(ModuleSection {
            name: self.name,
            dim: self.dim,
            action,
        })
    }
}

/// Parses and validates a document: the algebra must satisfy the Jacobi
/// identity and every module the homomorphism law.
pub fn parse(text: &str) -> Result<InputDocument> {
    let mut names: Option<Vec<String>> = None;
    let mut header_line = 0;
    let mut brackets = Vec::new();
    let mut algebra: Option<LieAlgebra> = None;
    let mut modules: Vec<ModuleSection> = Vec::new();
    let mut pending: Option<PendingModule> = None;
    let mut family: Option<FamilySection> = None;
    let mut section = None;
    let mut last_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        last_line = line;
        let toks = tokenize(raw);
        let Some(first) = toks.first() else { continue };
        if first.text.starts_with('#') {
            continue;
        }
        let rest = &toks[1..];

        // matrix rows inside an act block
        if let Some(p) = pending.as_mut() {
            if let Some((_, _, rows)) = p.current.as_mut() {
                if rows.len() < p.dim {
                    if toks.len() != p.dim {
                        return Err(syntax(
                            line,
                            first.column,
                            format!("matrix row has {} entries, expected {}", toks.len(), p.dim),
                        ));
                    }
                    rows.push(
                        toks.iter()
                            .map(|t| rational(line, t))
                            .collect::<Result<_>>()?,
                    );
                    continue;
                }
            }
        }

        match first.text {
            "algebra" => {
                if section.is_some() {
                    return Err(syntax(line, first.column, "repeated algebra header"));
                }
                let fs = fields(line, rest, &["dim", "basis"])?;
                let (dim, col) = field(&fs, "dim")
                    .ok_or_else(|| syntax(line, first.column, "algebra header needs dim="))?;
                let dim = count(line, dim, col)?;
                let basis = match field(&fs, "basis") {
                    None => (0..dim).map(|i| format!("e{i}")).collect(),
                    Some(("", _)) => Vec::new(),
                    Some((list, _)) => list.split(',').map(str::to_owned).collect::<Vec<_>>(),
                };
                if basis.len() != dim {
                    return Err(semantic(
                        line,
                        format!("{} basis names for dimension {dim}", basis.len()),
                    ));
                }
                names = Some(basis);
                header_line = line;
                section = Some(Section::Algebra);
            }
            "bracket" => {
                if section != Some(Section::Algebra) {
                    return Err(syntax(
                        line,
                        first.column,
                        "bracket lines belong to the algebra section",
                    ));
                }
                if rest.len() != 4 {
                    return Err(syntax(
                        line,
                        first.column,
                        "expected: bracket i j k coefficient",
                    ));
                }
                let dim = names.as_ref().map_or(0, Vec::len);
                let i = index(line, &rest[0])?;
                let j = index(line, &rest[1])?;
                let k = index(line, &rest[2])?;
                let c = rational(line, &rest[3])?;
                if i >= j {
                    return Err(semantic(line, format!("bracket ({i}, {j}) needs i < j")));
                }
                if j >= dim || k >= dim {
                    return Err(semantic(
                        line,
                        format!("bracket index out of range for dimension {dim}: {i} {j} {k}"),
                    ));
                }
                brackets.push((i, j, k, c));
            }
            "module" => {
                let alg = match section {
                    None => {
                        return Err(syntax(
                            line,
                            first.column,
                            "document must start with an algebra header",
                        ))
                    }
                    Some(Section::Family) => {
                        return Err(syntax(
                            line,
                            first.column,
                            "module sections must precede the family section",
                        ))
                    }
                    Some(Section::Algebra) => {
                        &*algebra.insert(build_algebra(header_line, &mut names, &brackets)?)
                    }
                    Some(Section::Module) => algebra.as_ref().expect("built on first module"),
                };
                if let Some(p) = pending.take() {
                    modules.push(p.finish(line, alg)?);
                }
                let fs = fields(line, rest, &["name", "dim"])?;
                let (name, name_col) = field(&fs, "name")
                    .ok_or_else(|| syntax(line, first.column, "module header needs name="))?;
                let (dim, dim_col) = field(&fs, "dim")
                    .ok_or_else(|| syntax(line, first.column, "module header needs dim="))?;
                if !is_module_name(name) {
                    return Err(syntax(line, name_col, format!("bad module name {name:?}")));
                }
                if BUILTIN_MODULES.contains(&name) || modules.iter().any(|m| m.name == name) {
                    return Err(semantic(
                        line,
                        format!("module name {name:?} is already taken"),
                    ));
                }
                pending = Some(PendingModule {
                    line,
                    name: name.to_owned(),
                    dim: count(line, dim, dim_col)?,
                    action: vec![None; alg.dim()],
                    current: None,
                });
                section = Some(Section::Module);
            }
            "act" => {
                let (Some(p), Some(alg)) = (pending.as_mut(), algebra.as_ref()) else {
                    return Err(syntax(line, first.column, "act outside a module section"));
                };
                let [target] = rest else {
                    return Err(syntax(line, first.column, "expected: act <basis name>"));
                };
                p.close_block(line)?;
                let basis = alg.index_of(target.text).ok_or_else(|| {
                    semantic(line, format!("no basis element named {:?}", target.text))
                })?;
                if p.action[basis].is_some() {
                    return Err(semantic(
                        line,
                        format!("second act block for {}", target.text),
                    ));
                }
                p.current = Some((basis, line, Vec::with_capacity(p.dim)));
            }
            "family" => {
                match section {
                    None => {
                        return Err(syntax(
                            line,
                            first.column,
                            "document must start with an algebra header",
                        ))
                    }
                    Some(Section::Family) => {
                        return Err(syntax(line, first.column, "repeated family section"))
                    }
                    Some(Section::Algebra) => {
                        algebra = Some(build_algebra(header_line, &mut names, &brackets)?);
                    }
                    Some(Section::Module) => {}
                }
                if let Some(p) = pending.take() {
                    modules.push(p.finish(line, algebra.as_ref().expect("algebra built"))?);
                }
                let fs = fields(line, rest, &["adequate"])?;
                let adequate = match field(&fs, "adequate") {
                    None | Some(("no", _)) => false,
                    Some(("yes", _)) => true,
                    Some((v, col)) => {
                        return Err(syntax(
                            line,
                            col,
                            format!("adequate must be yes or no, found {v:?}"),
                        ))
                    }
                };
                family = Some(FamilySection {
                    adequate,
                    members: Vec::new(),
                });
                section = Some(Section::Family);
            }
            "member" => {
                let Some(f) = family.as_mut() else {
                    return Err(syntax(
                        line,
                        first.column,
                        "member outside the family section",
                    ));
                };
                let Some((name, fs)) = rest.split_first() else {
                    return Err(syntax(line, first.column, "expected: member <module name>"));
                };
                let fs = fields(line, fs, &["claim"])?;
                let claim = match field(&fs, "claim") {
                    None => None,
                    Some(("irreducible", _)) => Some(true),
                    Some(("reducible", _)) => Some(false),
                    Some((v, col)) => {
                        return Err(syntax(
                            line,
                            col,
                            format!("claim must be irreducible or reducible, found {v:?}"),
                        ))
                    }
                };
                f.members.push(MemberEntry {
                    name: name.text.to_owned(),
                    claim,
                });
            }
            other => {
                let message = if pending.is_some() {
                    format!("unexpected {other:?}; the act block is already complete")
                } else {
                    format!("unknown keyword {other:?}")
                };
                return Err(syntax(line, first.column, message));
            }
        }
    }

    let algebra = match (algebra, section) {
        (Some(a), _) => a,
        (None, Some(_)) => build_algebra(header_line, &mut names, &brackets)?,
        (None, None) => return Err(syntax(last_line.max(1), 1, "missing algebra header")),
    };
    if let Some(p) = pending.take() {
        modules.push(p.finish(last_line, &algebra)?);
    }
    let doc = InputDocument {
        algebra,
        modules,
        family,
    };
    validate(&doc)?;
    Ok(doc)
}

fn build_algebra(
    line: usize,
    names: &mut Option<Vec<String>>,
    brackets: &[(usize, usize, usize, Scalar)],
) -> Result<LieAlgebra> {
    let names = names.take().expect("header seen");
    let alg = LieAlgebra::new(names, brackets.iter().cloned()).map_err(|e| semantic(line, e))?;
    alg.validate().map_err(Error::Jacobi)?;
    Ok(alg)
}

fn validate(doc: &InputDocument) -> Result<()> {
    let alg = Arc::new(doc.algebra.clone());
    for m in &doc.modules {
        let rep = Representation::new(alg.clone(), m.dim, m.action.clone())?;
        rep.validate().map_err(|violation| Error::NotAModule {
            module: m.name.clone(),
            violation,
        })?;
    }
    if let Some(f) = &doc.family {
        for member in &f.members {
            doc.module(&alg, &member.name)?;
        }
    }
    Ok(())
}

/// Canonical text of a document; [`parse`] inverts it.
pub fn emit(doc: &InputDocument) -> String {
    let mut out = String::new();
    let alg = &doc.algebra;
    if alg.dim() == 0 {
        out.push_str("algebra dim=0\n");
    } else {
        writeln!(
            out,
            "algebra dim={} basis={}",
            alg.dim(),
            alg.names().join(",")
        )
        .unwrap();
    }
    for ((i, j), terms) in alg.brackets() {
        for (k, c) in terms {
            writeln!(out, "bracket {i} {j} {k} {}", format_rational(c)).unwrap();
        }
    }
    for m in &doc.modules {
        writeln!(out, "module name={} dim={}", m.name, m.dim).unwrap();
        for (name, a) in alg.names().iter().zip(&m.action) {
            writeln!(out, "act {name}").unwrap();
            for r in 0..a.rows() {
                let row: Vec<String> = a.row(r).iter().map(format_rational).collect();
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
        }
    }
    if let Some(f) = &doc.family {
        writeln!(
            out,
            "family adequate={}",
            if f.adequate { "yes" } else { "no" }
        )
        .unwrap();
        for m in &f.members {
            match m.claim {
                None => writeln!(out, "member {}", m.name).unwrap(),
                Some(c) => writeln!(
                    out,
                    "member {} claim={}",
                    m.name,
                    if c { "irreducible" } else { "reducible" }
                )
                .unwrap(),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    const HEIS3_CHI: &str = "\
algebra dim=3 basis=x,y,z
bracket 0 1 2 1
module name=chi dim=1
act x
1
act y
0
act z
0
";

    #[test]
    fn heis3_document_parses() {
        let doc = parse(HEIS3_CHI).unwrap();
        assert!(doc.algebra.same_structure(&catalog("heis3").unwrap()));
        assert_eq!(doc.modules.len(), 1);
        assert_eq!(emit(&doc), HEIS3_CHI);
    }

    #[test]
    fn bracket_index_out_of_range() {
        let e = parse("algebra dim=2 basis=a,b\nbracket 0 1 2 1\n").unwrap_err();
        assert!(
            matches!(&e, Error::Malformed(m) if m.starts_with("line 2")),
            "{e}"
        );
    }

    #[test]
    fn zero_denominator_is_a_syntax_error() {
        let text = HEIS3_CHI.replacen("act y\n0", "act y\n1/0", 1);
        let e = parse(&text).unwrap_err();
        assert_eq!(
            e,
            Error::Syntax {
                line: 7,
                column: 3,
                message: "zero denominator in rational literal \"1/0\"".into()
            }
        );
    }

    #[test]
    fn jacobi_failure_names_triple() {
        // [x,y]=y, [x,z]=y, [y,z]=x
        let text = "algebra dim=3\nbracket 0 1 1 1\nbracket 0 2 1 1\nbracket 1 2 0 1\n";
        assert!(matches!(parse(text), Err(Error::Jacobi(v)) if v.triple == (0, 1, 2)));
    }

    #[test]
    fn homomorphism_failure_names_module_and_pair() {
        let text = HEIS3_CHI.replacen("act z\n0", "act z\n1", 1);
        match parse(&text) {
            Err(Error::NotAModule { module, violation }) => {
                assert_eq!(module, "chi");
                assert_eq!(violation.pair, (0, 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_positions() {
        let e = parse("algebra dim=2\nbracket 0 x 1 1\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 2,
                    column: 11,
                    ..
                }
            ),
            "{e}"
        );
        let e = parse("algebra dim=2 colour=red\n").unwrap_err();
        assert!(
            matches!(
                e,
                Error::Syntax {
                    line: 1,
                    column: 15,
                    ..
                }
            ),
            "{e}"
        );
    }

    #[test]
    fn family_round_trip() {
        let text = format!("{HEIS3_CHI}family adequate=yes\nmember chi claim=irreducible\nmember K\nmember chi(0,-1/2,0)\n");
        let doc = parse(&text).unwrap();
        assert_eq!(emit(&doc), text);
        assert_eq!(parse(&emit(&doc)).unwrap(), doc);
    }

    #[test]
    fn builtin_modules() {
        let doc = InputDocument::from_algebra(catalog("sl2").unwrap());
        let alg = Arc::new(doc.algebra.clone());
        assert_eq!(doc.module(&alg, "V(3)").unwrap().dim(), 4);
        assert_eq!(doc.module(&alg, "adjoint").unwrap().dim(), 3);
        assert!(doc.module(&alg, "chi(1,0,0)").is_err());
        assert!(matches!(doc.module(&alg, "W"), Err(Error::Lookup(_))));
    }

    #[test]
    fn zero_dimensional_algebra() {
        let doc = parse("algebra dim=0\n").unwrap();
        assert_eq!(doc.algebra.dim(), 0);
        assert_eq!(parse(&emit(&doc)).unwrap(), doc);
    }
}
