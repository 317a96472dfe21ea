//! Circuit representation: named registers plus an editable instruction list.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gates::{GateKind, GateSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegClass {
    Quantum,
    Classical,
}

/// A named register declaration. Doubles as a handle for addressing its bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegisterDecl {
    name: Arc<str>,
    size: usize,
    class: RegClass,
}

pub fn is_valid_register_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|ch| ch.is_ascii_lowercase() || ch.is_ascii_digit() || ch == '_')
}

impl RegisterDecl {
    pub fn new(name: &str, size: usize, class: RegClass) -> Result<Self> {
        if !is_valid_register_name(name) {
            return Err(Error::Registry(format!("invalid register name {name:?}")));
        }
        if size == 0 {
            return Err(Error::Registry(format!("register {name} has size 0")));
        }
        Ok(RegisterDecl {
            name: name.into(),
            size,
            class,
        })
    }

    pub fn quantum(name: &str, size: usize) -> Result<Self> {
        RegisterDecl::new(name, size, RegClass::Quantum)
    }

    pub fn classical(name: &str, size: usize) -> Result<Self> {
        RegisterDecl::new(name, size, RegClass::Classical)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn class(&self) -> RegClass {
        self.class
    }

    /// Reference to bit `index` of this quantum register. Not range-checked
    /// until the reference is used in a circuit.
    pub fn qubit(&self, index: usize) -> Qubit {
        Qubit {
            reg: self.name.clone(),
            index,
        }
    }

    pub fn clbit(&self, index: usize) -> Clbit {
        Clbit {
            reg: self.name.clone(),
            index,
        }
    }

    pub fn qubits(&self) -> Vec<Qubit> {
        (0..self.size).map(|i| self.qubit(i)).collect()
    }

    pub fn clbits(&self) -> Vec<Clbit> {
        (0..self.size).map(|i| self.clbit(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Qubit {
    reg: Arc<str>,
    index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clbit {
    reg: Arc<str>,
    index: usize,
}

impl Qubit {
    pub fn register(&self) -> &str {
        &self.reg
    }

    pub fn index(&self) -> usize {
        self.index
    }
}

impl Clbit {
    pub fn register(&self) -> &str {
        &self.reg
    }

    pub fn index(&self) -> usize {
        self.index
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instruction {
    Gate { spec: GateSpec, qubits: Vec<Qubit> },
    Measure { qubit: Qubit, clbit: Clbit },
}

impl Instruction {
    pub fn gate(spec: GateSpec, qubits: &[Qubit]) -> Self {
        Instruction::Gate {
            spec,
            qubits: qubits.to_vec(),
        }
    }

    pub fn measure(qubit: &Qubit, clbit: &Clbit) -> Self {
        Instruction::Measure {
            qubit: qubit.clone(),
            clbit: clbit.clone(),
        }
    }

    pub fn qubits(&self) -> &[Qubit] {
        match self {
            Instruction::Gate { qubits, .. } => qubits,
            Instruction::Measure { qubit, .. } => std::slice::from_ref(qubit),
        }
    }

    pub fn is_measure(&self) -> bool {
        matches!(self, Instruction::Measure { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EditAction {
    DeleteAt(usize),
    InsertAt(usize, Instruction),
    Append(Instruction),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    name: String,
    qregs: Vec<RegisterDecl>,
    cregs: Vec<RegisterDecl>,
    instructions: Vec<Instruction>,
}

macro_rules! fixed_gate {
    ($($method:ident => $kind:ident($($q:ident),+);)*) => {
        $(
            #[allow(clippy::cloned_ref_to_slice_refs)]
            pub fn $method(&mut self, $($q: &Qubit),+) -> Result<&mut Self> {
                self.gate(GateSpec::fixed(GateKind::$kind), &[$($q.clone()),+])
            }
        )*
    };
}

macro_rules! angle_gate {
    ($($method:ident => $kind:ident($($q:ident),+);)*) => {
        $(
            #[allow(clippy::cloned_ref_to_slice_refs)]
            pub fn $method(&mut self, angle: f64, $($q: &Qubit),+) -> Result<&mut Self> {
                self.gate(GateSpec::new(GateKind::$kind, Some(angle))?, &[$($q.clone()),+])
            }
        )*
    };
}

impl Circuit {
    pub fn new(name: &str, qregs: Vec<RegisterDecl>, cregs: Vec<RegisterDecl>) -> Result<Self> {
        let mut circuit = Circuit {
            name: name.to_string(),
            qregs: Vec::new(),
            cregs: Vec::new(),
            instructions: Vec::new(),
        };
        for decl in qregs {
            if decl.class != RegClass::Quantum {
                return Err(Error::Registry(format!("{} is not a quantum register", decl.name)));
            }
            circuit.add_register(decl)?;
        }
        for decl in cregs {
            if decl.class != RegClass::Classical {
                return Err(Error::Registry(format!("{} is not a classical register", decl.name)));
            }
            circuit.add_register(decl)?;
        }
        Ok(circuit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn qregs(&self) -> &[RegisterDecl] {
        &self.qregs
    }

    pub fn cregs(&self) -> &[RegisterDecl] {
        &self.cregs
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    pub fn num_qubits(&self) -> usize {
        self.qregs.iter().map(|r| r.size).sum()
    }

    pub fn num_clbits(&self) -> usize {
        self.cregs.iter().map(|r| r.size).sum()
    }

    pub fn register(&self, name: &str) -> Option<&RegisterDecl> {
        self.qregs
            .iter()
            .chain(&self.cregs)
            .find(|r| &*r.name == name)
    }

    pub fn add_register(&mut self, decl: RegisterDecl) -> Result<()> {
        if self.register(&decl.name).is_some() {
            return Err(Error::Registry(format!("register {} already declared", decl.name)));
        }
        match decl.class {
            RegClass::Quantum => self.qregs.push(decl),
            RegClass::Classical => self.cregs.push(decl),
        }
        Ok(())
    }

    pub fn add_qreg(&mut self, name: &str, size: usize) -> Result<RegisterDecl> {
        let decl = RegisterDecl::quantum(name, size)?;
        self.add_register(decl.clone())?;
        Ok(decl)
    }

    pub fn add_creg(&mut self, name: &str, size: usize) -> Result<RegisterDecl> {
        let decl = RegisterDecl::classical(name, size)?;
        self.add_register(decl.clone())?;
        Ok(decl)
    }

    /// `prefix` if unused, otherwise `prefix` followed by the first free number.
    pub fn fresh_register_name(&self, prefix: &str) -> String {
        if self.register(prefix).is_none() {
            return prefix.to_string();
        }
        (1..)
            .map(|n| format!("{prefix}{n}"))
            .find(|name| self.register(name).is_none())
            .expect("unbounded search")
    }

    /// Every qubit in flat order: registers in declaration order, then index.
    pub fn all_qubits(&self) -> Vec<Qubit> {
        self.qregs.iter().flat_map(RegisterDecl::qubits).collect()
    }

    fn flat_index(regs: &[RegisterDecl], reg: &str, index: usize, what: &str) -> Result<usize> {
        let mut offset = 0;
        for r in regs {
            if &*r.name == reg {
                if index >= r.size {
                    return Err(Error::Reference(format!(
                        "{what} {reg}[{index}] out of range for size {}",
                        r.size
                    )));
                }
                return Ok(offset + index);
            }
            offset += r.size;
        }
        Err(Error::Reference(format!("undeclared {what} register {reg}")))
    }

    /// Position of `q` in [`all_qubits`](Self::all_qubits) order.
    pub fn qubit_index(&self, q: &Qubit) -> Result<usize> {
        Circuit::flat_index(&self.qregs, &q.reg, q.index, "quantum")
    }

    pub fn clbit_index(&self, c: &Clbit) -> Result<usize> {
        Circuit::flat_index(&self.cregs, &c.reg, c.index, "classical")
    }

    /// Checks that every reference resolves and that gate operands are distinct.
    pub fn validate(&self, inst: &Instruction) -> Result<()> {
        match inst {
            Instruction::Gate { spec, qubits } => {
                if qubits.len() != spec.arity() {
                    return Err(Error::Reference(format!(
                        "{} takes {} qubits, got {}",
                        spec.kind().mnemonic(),
                        spec.arity(),
                        qubits.len()
                    )));
                }
                let mut seen = Vec::with_capacity(qubits.len());
                for q in qubits {
                    let i = self.qubit_index(q)?;
                    if seen.contains(&i) {
                        return Err(Error::Aliasing(format!(
                            "{}[{}] used twice in one gate",
                            q.reg, q.index
                        )));
                    }
                    seen.push(i);
                }
                Ok(())
            }
            Instruction::Measure { qubit, clbit } => {
                self.qubit_index(qubit)?;
                self.clbit_index(clbit)?;
                Ok(())
            }
        }
    }

    pub fn append(&mut self, inst: Instruction) -> Result<&mut Self> {
        self.validate(&inst)?;
        self.instructions.push(inst);
        Ok(self)
    }

    pub fn insert_at(&mut self, index: usize, inst: Instruction) -> Result<()> {
        if index > self.instructions.len() {
            return Err(Error::Index {
                index,
                len: self.instructions.len(),
            });
        }
        self.validate(&inst)?;
        self.instructions.insert(index, inst);
        Ok(())
    }

    pub fn delete_at(&mut self, index: usize) -> Result<Instruction> {
        if index >= self.instructions.len() {
            return Err(Error::Index {
                index,
                len: self.instructions.len(),
            });
        }
        Ok(self.instructions.remove(index))
    }

    /// Applies one edit; a delete returns the removed instruction.
    pub fn edit(&mut self, action: EditAction) -> Result<Option<Instruction>> {
        match action {
            EditAction::DeleteAt(i) => self.delete_at(i).map(Some),
            EditAction::InsertAt(i, inst) => self.insert_at(i, inst).map(|_| None),
            EditAction::Append(inst) => self.append(inst).map(|_| None),
        }
    }

    fn merge_registers(&mut self, other: &Circuit) -> Result<()> {
        for decl in other.qregs.iter().chain(&other.cregs) {
            match self.register(&decl.name) {
                Some(existing) if existing == decl => {}
                Some(existing) => {
                    return Err(Error::Registry(format!(
                        "register {} declared with size {} as {:?} and size {} as {:?}",
                        decl.name, existing.size, existing.class, decl.size, decl.class
                    )))
                }
                None => self.add_register(decl.clone())?,
            }
        }
        Ok(())
    }

    /// Appends `other`'s registers (merged by name) and instructions.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        let mut merged = self.clone();
        merged.merge_registers(other)?;
        merged.instructions.extend(other.instructions.iter().cloned());
        *self = merged;
        Ok(())
    }

    pub fn concat(a: &Circuit, b: &Circuit) -> Result<Circuit> {
        let mut out = a.clone();
        out.extend(b)?;
        Ok(out)
    }

    pub fn gate(&mut self, spec: GateSpec, qubits: &[Qubit]) -> Result<&mut Self> {
        self.append(Instruction::gate(spec, qubits))
    }

    pub fn measure(&mut self, qubit: &Qubit, clbit: &Clbit) -> Result<&mut Self> {
        self.append(Instruction::measure(qubit, clbit))
    }

    fixed_gate! {
        id => I(q);
        x => X(q);
        y => Y(q);
        z => Z(q);
        h => H(q);
        s => S(q);
        t => T(q);
        cx => CX(control, target);
        cz => CZ(control, target);
        swap => SWAP(a, b);
        cswap => CSWAP(control, a, b);
        ccx => CCX(c0, c1, target);
    }

    angle_gate! {
        u1 => U1(q);
        rx => RX(q);
        ry => RY(q);
        rz => RZ(q);
        cu1 => CU1(control, target);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qc(n: usize, m: usize) -> (Circuit, RegisterDecl, RegisterDecl) {
        let q = RegisterDecl::quantum("q", n).unwrap();
        let c = RegisterDecl::classical("c", m).unwrap();
        (Circuit::new("qc", vec![q.clone()], vec![c.clone()]).unwrap(), q, c)
    }

    #[test]
    fn new_circuit_counts() {
        let (circuit, _, _) = qc(2, 2);
        assert_eq!(circuit.num_qubits(), 2);
        assert_eq!(circuit.num_clbits(), 2);
        assert!(circuit.is_empty());
        let quantum_only =
            Circuit::new("qc", vec![RegisterDecl::quantum("q", 1).unwrap()], vec![]).unwrap();
        assert_eq!(quantum_only.num_clbits(), 0);
    }

    #[test]
    fn duplicate_names_rejected() {
        let q = RegisterDecl::quantum("q", 1).unwrap();
        assert!(matches!(
            Circuit::new("qc", vec![q.clone(), q.clone()], vec![]),
            Err(Error::Registry(_))
        ));
        let (mut circuit, _, _) = qc(1, 1);
        assert!(matches!(circuit.add_qreg("c", 2), Err(Error::Registry(_))));
    }

    #[test]
    fn register_names_are_checked() {
        assert!(RegisterDecl::quantum("q_1", 1).is_ok());
        for bad in ["", "Q", "1q", "q-1"] {
            assert!(RegisterDecl::quantum(bad, 1).is_err(), "{bad}");
        }
        assert!(RegisterDecl::quantum("q", 0).is_err());
    }

    #[test]
    fn references_checked_at_append() {
        let (mut circuit, q, c) = qc(2, 1);
        assert!(circuit.h(&q.qubit(2)).is_err());
        assert!(circuit.measure(&q.qubit(0), &c.clbit(1)).is_err());
        assert!(matches!(circuit.cx(&q.qubit(0), &q.qubit(0)), Err(Error::Aliasing(_))));
        let ghost = RegisterDecl::quantum("r", 1).unwrap();
        assert!(circuit.h(&ghost.qubit(0)).is_err());
        assert!(circuit.is_empty());
    }

    #[test]
    fn edits_behave_like_sequence_edits() {
        let (mut circuit, q, c) = qc(2, 2);
        circuit.h(&q.qubit(0)).unwrap().h(&q.qubit(1)).unwrap();
        circuit.measure(&q.qubit(0), &c.clbit(0)).unwrap();
        let removed = circuit.edit(EditAction::DeleteAt(1)).unwrap().unwrap();
        assert_eq!(circuit.len(), 2);
        assert!(circuit.instructions()[1].is_measure());
        circuit.edit(EditAction::Append(removed.clone())).unwrap();
        assert_eq!(circuit.instructions()[2], removed);
        circuit.edit(EditAction::InsertAt(0, removed.clone())).unwrap();
        assert_eq!(circuit.instructions()[0], removed);
        assert!(matches!(circuit.delete_at(9), Err(Error::Index { index: 9, len: 4 })));
        assert!(matches!(circuit.insert_at(9, removed), Err(Error::Index { .. })));
    }

    #[test]
    fn concat_merges_registers() {
        let mut a = Circuit::new("a", vec![RegisterDecl::quantum("q1", 2).unwrap()], vec![]).unwrap();
        let mut b = Circuit::new("b", vec![RegisterDecl::quantum("q2", 2).unwrap()], vec![]).unwrap();
        let q1 = a.qregs()[0].clone();
        let q2 = b.qregs()[0].clone();
        a.h(&q1.qubit(0)).unwrap().id(&q1.qubit(1)).unwrap();
        b.id(&q2.qubit(0)).unwrap().h(&q2.qubit(1)).unwrap();
        let joined = Circuit::concat(&a, &b).unwrap();
        assert_eq!(joined.qregs().len(), 2);
        assert_eq!(joined.len(), 4);
        assert_eq!(a.len(), 2);

        let mut shared = a.clone();
        shared.extend(&a).unwrap();
        assert_eq!(shared.qregs().len(), 1);
        assert_eq!(shared.len(), 4);

        let empty = Circuit::new("e", vec![], vec![]).unwrap();
        assert_eq!(Circuit::concat(&a, &empty).unwrap(), a);
    }

    #[test]
    fn incompatible_merge_rejected_without_mutation() {
        let a = Circuit::new("a", vec![RegisterDecl::quantum("q", 2).unwrap()], vec![]).unwrap();
        let b = Circuit::new("b", vec![RegisterDecl::quantum("q", 3).unwrap()], vec![]).unwrap();
        let mut a2 = a.clone();
        assert!(matches!(a2.extend(&b), Err(Error::Registry(_))));
        assert_eq!(a2, a);
        let c = Circuit::new("c", vec![], vec![RegisterDecl::classical("q", 2).unwrap()]).unwrap();
        assert!(Circuit::concat(&a, &c).is_err());
    }

    #[test]
    fn fresh_names_skip_existing() {
        let (mut circuit, _, _) = qc(1, 1);
        assert_eq!(circuit.fresh_register_name("anc"), "anc");
        circuit.add_qreg("anc", 1).unwrap();
        assert_eq!(circuit.fresh_register_name("anc"), "anc1");
    }

    #[test]
    fn flat_indices_follow_declaration_order() {
        let (mut circuit, q, _) = qc(2, 1);
        let anc = circuit.add_qreg("anc", 3).unwrap();
        assert_eq!(circuit.qubit_index(&q.qubit(1)).unwrap(), 1);
        assert_eq!(circuit.qubit_index(&anc.qubit(0)).unwrap(), 2);
        assert_eq!(circuit.all_qubits().len(), 5);
    }
}
