//! OpenQASM 2.0 subset: emission and parsing.

use std::fmt::Write as _;

use crate::circuit::{Circuit, Clbit, Instruction, Qubit, RegisterDecl};
use crate::error::{Error, Result};
use crate::gates::{GateKind, GateSpec};

pub const HEADER: &str = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

pub fn emit_qasm(circuit: &Circuit) -> String {
    let mut out = String::from(HEADER);
    for r in circuit.qregs() {
        writeln!(out, "qreg {}[{}];", r.name(), r.size()).unwrap();
    }
    for r in circuit.cregs() {
        writeln!(out, "creg {}[{}];", r.name(), r.size()).unwrap();
    }
    for inst in circuit.instructions() {
        match inst {
            Instruction::Gate { spec, qubits } => {
                let args: Vec<String> = qubits
                    .iter()
                    .map(|q| format!("{}[{}]", q.register(), q.index()))
                    .collect();
                writeln!(out, "{} {};", spec, args.join(",")).unwrap();
            }
            Instruction::Measure { qubit, clbit } => {
                writeln!(
                    out,
                    "measure {}[{}] -> {}[{}];",
                    qubit.register(),
                    qubit.index(),
                    clbit.register(),
                    clbit.index()
                )
                .unwrap();
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Str(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Arrow,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Number(s) => format!("number {s}"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Arrow => "'->'".into(),
        }
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut line = 1;
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let next = chars.get(i + 1).copied();
        match ch {
            '\n' => {
                line += 1;
                i += 1;
            }
            c if c.is_whitespace() => i += 1,
            '/' if next == Some('/') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' | ')' | '[' | ']' | ',' | ';' => {
                toks.push((
                    match ch {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '[' => Tok::LBracket,
                        ']' => Tok::RBracket,
                        ',' => Tok::Comma,
                        _ => Tok::Semi,
                    },
                    line,
                ));
                i += 1;
            }
            '-' if next == Some('>') => {
                toks.push((Tok::Arrow, line));
                i += 2;
            }
            '"' => {
                let start = i + 1;
                let end = chars[start..]
                    .iter()
                    .position(|&c| c == '"' || c == '\n')
                    .map(|p| start + p)
                    .filter(|&e| chars[e] == '"')
                    .ok_or_else(|| perr(line, "unterminated string"))?;
                toks.push((Tok::Str(chars[start..end].iter().collect()), line));
                i = end + 1;
            }
            c if c.is_ascii_digit() || c == '.' || c == '-' || c == '+' => {
                let start = i;
                i += 1;
                while i < chars.len() {
                    let c = chars[i];
                    let exp_sign = (c == '-' || c == '+') && matches!(chars[i - 1], 'e' | 'E');
                    if c.is_ascii_alphanumeric() || c == '.' || exp_sign {
                        i += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Number(chars[start..i].iter().collect()), line));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), line));
            }
            other => return Err(perr(line, format!("unexpected character {other:?}"))),
        }
    }
    Ok(toks)
}

struct Stmt<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
}

impl<'a> Stmt<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.line, |&(_, l)| l)
    }

    fn next(&mut self, wanted: &str) -> Result<&'a Tok> {
        let line = self.here();
        let tok = self
            .toks
            .get(self.pos)
            .map(|(t, _)| t)
            .ok_or_else(|| perr(line, format!("expected {wanted} before ';'")))?;
        self.pos += 1;
        Ok(tok)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let line = self.here();
        let got = self.next(&tok.describe())?;
        if *got != tok {
            return Err(perr(
                line,
                format!("expected {}, found {}", tok.describe(), got.describe()),
            ));
        }
        Ok(())
    }

    fn ident(&mut self, wanted: &str) -> Result<&'a str> {
        let line = self.here();
        match self.next(wanted)? {
            Tok::Ident(s) => Ok(s),
            other => Err(perr(line, format!("expected {wanted}, found {}", other.describe()))),
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let line = self.here();
        match self.next("an integer")? {
            Tok::Number(s) => s
                .parse()
                .map_err(|_| perr(line, format!("expected an integer, found {s}"))),
            other => Err(perr(line, format!("expected an integer, found {}", other.describe()))),
        }
    }

    /// `name[index]`
    fn reference(&mut self) -> Result<(&'a str, usize)> {
        let name = self.ident("a register name")?;
        self.expect(Tok::LBracket)?;
        let index = self.integer()?;
        self.expect(Tok::RBracket)?;
        Ok((name, index))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(perr(self.here(), format!("unexpected {}", t.describe()))),
        }
    }
}

fn resolve_qubit(circuit: &Circuit, line: usize, (name, index): (&str, usize)) -> Result<Qubit> {
    let reg = circuit
        .qregs()
        .iter()
        .find(|r| r.name() == name)
        .ok_or_else(|| perr(line, format!("undeclared quantum register {name}")))?;
    if index >= reg.size() {
        return Err(perr(
            line,
            format!("index {index} out of range for {name}[{}]", reg.size()),
        ));
    }
    Ok(reg.qubit(index))
}

fn resolve_clbit(circuit: &Circuit, line: usize, (name, index): (&str, usize)) -> Result<Clbit> {
    let reg = circuit
        .cregs()
        .iter()
        .find(|r| r.name() == name)
        .ok_or_else(|| perr(line, format!("undeclared classical register {name}")))?;
    if index >= reg.size() {
        return Err(perr(
            line,
            format!("index {index} out of range for {name}[{}]", reg.size()),
        ));
    }
    Ok(reg.clbit(index))
}

fn parse_angle(stmt: &mut Stmt<'_>) -> Result<f64> {
    let line = stmt.here();
    stmt.expect(Tok::LParen)?;
    let value = match stmt.next("an angle")? {
        Tok::Number(s) => s
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| perr(line, format!("malformed angle {s}")))?,
        other => return Err(perr(line, format!("malformed angle {}", other.describe()))),
    };
    stmt.expect(Tok::RParen)?;
    Ok(value)
}

fn parse_statement(circuit: &mut Circuit, stmt: &mut Stmt<'_>, first: bool) -> Result<()> {
    let line = stmt.line;
    let keyword = stmt.ident("a statement")?;
    match keyword {
        "OPENQASM" => {
            if !first {
                return Err(perr(line, "OPENQASM must be the first statement"));
            }
            match stmt.next("a version")? {
                Tok::Number(v) if v == "2.0" || v == "2" => {}
                other => {
                    return Err(perr(line, format!("unsupported version {}", other.describe())))
                }
            }
        }
        "include" => match stmt.next("a file name")? {
            Tok::Str(f) if f == "qelib1.inc" => {}
            other => return Err(perr(line, format!("unsupported include {}", other.describe()))),
        },
        "qreg" | "creg" => {
            let (name, size) = stmt.reference()?;
            let decl = if keyword == "qreg" {
                RegisterDecl::quantum(name, size)
            } else {
                RegisterDecl::classical(name, size)
            };
            decl.and_then(|d| circuit.add_register(d))
                .map_err(|e| perr(line, e.to_string()))?;
        }
        "measure" => {
            let q = stmt.reference()?;
            stmt.expect(Tok::Arrow)?;
            let c = stmt.reference()?;
            stmt.finish()?;
            let inst = Instruction::measure(
                &resolve_qubit(circuit, line, q)?,
                &resolve_clbit(circuit, line, c)?,
            );
            circuit.append(inst).map_err(|e| perr(line, e.to_string()))?;
        }
        mnemonic => {
            let kind = GateKind::from_mnemonic(mnemonic)
                .ok_or_else(|| perr(line, format!("unknown gate {mnemonic:?}")))?;
            let angle = if stmt.peek() == Some(&Tok::LParen) {
                Some(parse_angle(stmt)?)
            } else {
                None
            };
            let spec = GateSpec::new(kind, angle).map_err(|e| perr(line, e.to_string()))?;
            let mut qubits = vec![resolve_qubit(circuit, line, stmt.reference()?)?];
            while stmt.peek() == Some(&Tok::Comma) {
                stmt.pos += 1;
                qubits.push(resolve_qubit(circuit, line, stmt.reference()?)?);
            }
            if qubits.len() != kind.arity() {
                return Err(perr(
                    line,
                    format!(
                        "{mnemonic} takes {} qubits, got {}",
                        kind.arity(),
                        qubits.len()
                    ),
                ));
            }
            circuit
                .gate(spec, &qubits)
                .map_err(|e| perr(line, e.to_string()))?;
        }
    }
    stmt.finish()
}

pub fn parse_qasm(text: &str) -> Result<Circuit> {
    let toks = lex(text)?;
    let mut circuit = Circuit::new("circuit", vec![], vec![])?;
    let mut start = 0;
    let mut first = true;
    while start < toks.len() {
        let line = toks[start].1;
        let end = toks[start..]
            .iter()
            .position(|(t, _)| *t == Tok::Semi)
            .map(|p| start + p)
            .ok_or_else(|| perr(line, "missing ';'"))?;
        let mut stmt = Stmt {
            toks: &toks[start..end],
            pos: 0,
            line,
        };
        parse_statement(&mut circuit, &mut stmt, first)?;
        first = false;
        start = end + 1;
    }
    Ok(circuit)
}
