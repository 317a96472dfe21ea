//! Step-by-step traces for the algorithm demos.


use ketsim::algorithms::{
    blackbox_g_bv, blackbox_g_deutsch, blackbox_g_dj, coin_flip, confirms_shift, grover,
    simon_circuit, simons_classical, BlackboxRecord, DjOdds,
};
use ketsim::bits::to_binary;
use ketsim::display::DisplayOptions;
use ketsim::qft::{qft, qft_dgr, qft_grover_demo, QftMode};
use ketsim::{format_counts, format_wavefunction, run_counts, run_statevector, BitSeq, Circuit, Qubit, RunSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{DemoName, Failure};

#[derive(Debug, Clone)]
pub struct Request {
    pub qubits: Option<usize>,
    pub marked: Option<String>,
    pub reveal: bool,
    pub paper_compat: bool,
    pub balance_odds: bool,
    pub flips: Option<u64>,
    pub shots: u64,
    pub display: DisplayOptions,
    pub column: bool,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl Request {
    /// Rejects flags that the chosen demo does not use.
    pub fn check(&self, name: DemoName) -> Result<(), Failure> {
        let flag_for = |set: bool, flag: &str, allowed: &[DemoName]| {
            if set && !allowed.contains(&name) {
                Err(usage(format!("--{flag} does not apply to this demo")))
            } else {
                Ok(())
            }
        };
        use DemoName::*;
        flag_for(self.paper_compat, "paper-compat", &[Qft])?;
        flag_for(self.balance_odds, "balance-odds", &[Dj])?;
        flag_for(self.flips.is_some(), "flips", &[Coin])?;
        flag_for(self.marked.is_some(), "marked", &[Grover, Qft])?;
        flag_for(self.qubits.is_some(), "qubits", &[Dj, Bv, Simon, Grover, Qft])?;
        flag_for(self.reveal, "reveal", &[Deutsch, Dj, Bv, Simon, Grover])?;
        if let (Some(m), Some(q)) = (self.marked_bits()?, self.qubits) {
            if m.len() != q {
                return Err(usage(format!("--marked has {} bits but --qubits is {q}", m.len())));
            }
        }
        Ok(())
    }

    fn marked_bits(&self) -> Result<Option<BitSeq>, Failure> {
        self.marked
            .as_deref()
            .map(|m| m.parse::<BitSeq>().map_err(|e| usage(format!("--marked: {e}"))))
            .transpose()
    }
}

/// Accumulates the printed trace.
struct Trace<'a> {
    out: String,
    display: &'a DisplayOptions,
}

impl<'a> Trace<'a> {
    fn new(display: &'a DisplayOptions) -> Self {
        Trace {
            out: String::new(),
            display,
        }
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.out.push_str(text.as_ref());
        self.out.push('\n');
    }

    fn heading(&mut self, title: &str) {
        if !self.out.is_empty() {
            self.out.push('\n');
        }
        self.line(format!("___ {title} ___"));
    }

    /// Wavefunction of the first `main` qubits, hiding any helpers after them.
    fn state(&mut self, circuit: &Circuit, main: usize) -> Result<(), Failure> {
        let total = circuit.num_qubits();
        let opts = if total > main {
            self.display
                .clone()
                .with_systems(&[main as i64, (total - main) as i64])
                .with_show_systems(&[true, false])
        } else {
            self.display.clone()
        };
        let text = format_wavefunction(&run_statevector(circuit)?, &opts)?;
        self.line(text);
        Ok(())
    }

    fn reveal(&mut self, record: &BlackboxRecord) {
        self.out.push('\n');
        self.line(format!("sneak peek: {record}"));
    }
}

fn measure_into_new_creg(circuit: &mut Circuit, qubits: &[Qubit]) -> Result<(), Failure> {
    let c = circuit.add_creg("c", qubits.len())?;
    for (i, q) in qubits.iter().enumerate() {
        circuit.measure(q, &c.clbit(i))?;
    }
    Ok(())
}

/// Most frequent outcome, in qubit order.
fn top_outcome(counts: &ketsim::Counts) -> String {
    let (key, _) = counts
        .entries()
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .expect("at least one shot");
    key.chars().rev().collect()
}

pub fn run(name: DemoName, request: &Request, seed: u64) -> Result<String, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Trace::new(&request.display);
    match name {
        DemoName::Deutsch => deutsch(request, &mut rng, &mut trace)?,
        DemoName::Dj => deutsch_jozsa(request, &mut rng, &mut trace)?,
        DemoName::Bv => bernstein_vazirani(request, &mut rng, &mut trace)?,
        DemoName::Simon => simon(request, &mut rng, &mut trace)?,
        DemoName::Grover => search(request, &mut rng, &mut trace)?,
        DemoName::Qft => fourier(request, &mut trace)?,
        DemoName::Coin => coin(request, &mut rng, &mut trace)?,
    }
    Ok(trace.out)
}

fn deutsch(request: &Request, rng: &mut ChaCha8Rng, trace: &mut Trace) -> Result<(), Failure> {
    let mut circuit = Circuit::new("deutsch", vec![], vec![])?;
    let q = circuit.add_qreg("q", 2)?.qubits();
    circuit.h(&q[0])?.x(&q[1])?.h(&q[1])?;
    trace.heading("Initial State");
    trace.state(&circuit, 2)?;

    let f = blackbox_g_deutsch(&mut circuit, &q, rng)?;
    trace.heading("After Blackbox");
    trace.state(&circuit, 2)?;

    circuit.h(&q[0])?.h(&q[1])?;
    trace.heading("After H^2");
    trace.state(&circuit, 2)?;

    measure_into_new_creg(&mut circuit, &q[..1])?;
    let counts = run_counts(&circuit, request.shots, RunSeed(rng.gen()))?;
    trace.heading("Measured Qubit 0");
    trace.line(format_counts(&counts, request.column));
    let kind = if top_outcome(&counts) == "1" { "balanced" } else { "constant" };
    trace.line(format!("\nConclusion: f is a {kind} function"));
    if request.reveal {
        trace.reveal(&BlackboxRecord::Deutsch(f));
    }
    Ok(())
}

/// Main register `q`, one ancilla prepared in |1>, and a classical register.
fn oracle_setup(q: usize) -> Result<(Circuit, Vec<Qubit>, Qubit), Failure> {
    if q < 2 {
        return Err(usage(format!("--qubits must be at least 2, got {q}")));
    }
    let mut circuit = Circuit::new("qc", vec![], vec![])?;
    let main = circuit.add_qreg("q", q)?.qubits();
    let anc = circuit.add_qreg("anc", 1)?.qubit(0);
    for x in &main {
        circuit.h(x)?;
    }
    circuit.x(&anc)?;
    Ok((circuit, main, anc))
}

fn deutsch_jozsa(request: &Request, rng: &mut ChaCha8Rng, trace: &mut Trace) -> Result<(), Failure> {
    let q = request.qubits.unwrap_or(3);
    let (mut circuit, main, anc) = oracle_setup(q)?;
    trace.heading("Before g");
    trace.state(&circuit, q)?;

    let odds = if request.balance_odds { DjOdds::Even } else { DjOdds::Uniform };
    circuit.h(&anc)?;
    let record = blackbox_g_dj(q, &mut circuit, &main, &anc, rng, odds)?;
    circuit.h(&anc)?;
    trace.heading("After g");
    trace.state(&circuit, q)?;

    for x in &main {
        circuit.h(x)?;
    }
    trace.heading(&format!("After H^{q}"));
    trace.state(&circuit, q)?;

    measure_into_new_creg(&mut circuit, &main)?;
    let counts = run_counts(&circuit, request.shots, RunSeed(rng.gen()))?;
    trace.heading("Measured State");
    trace.line(format_counts(&counts, request.column));
    let constant = top_outcome(&counts).chars().all(|b| b == '0');
    let kind = if constant { "constant" } else { "balanced" };
    trace.line(format!("\nConclusion: f is a {kind} function"));
    if request.reveal {
        trace.reveal(&BlackboxRecord::Dj(record));
    }
    Ok(())
}

fn bernstein_vazirani(request: &Request, rng: &mut ChaCha8Rng, trace: &mut Trace) -> Result<(), Failure> {
    let q = request.qubits.unwrap_or(3);
    let (mut circuit, main, anc) = oracle_setup(q)?;
    trace.heading("Before g");
    trace.state(&circuit, q)?;

    circuit.h(&anc)?;
    let a = blackbox_g_bv(q, &mut circuit, &main, &anc, rng)?;
    circuit.h(&anc)?;
    trace.heading("After g");
    trace.state(&circuit, q)?;

    for x in &main {
        circuit.h(x)?;
    }
    trace.heading(&format!("After H^{q}"));
    trace.state(&circuit, q)?;

    measure_into_new_creg(&mut circuit, &main)?;
    let counts = run_counts(&circuit, request.shots, RunSeed(rng.gen()))?;
    trace.heading("Measured State");
    trace.line(format_counts(&counts, request.column));
    trace.line(format!("\nConclusion: a = {}", top_outcome(&counts)));
    if request.reveal {
        trace.reveal(&BlackboxRecord::Bv(a));
    }
    Ok(())
}

fn simon(request: &Request, rng: &mut ChaCha8Rng, trace: &mut Trace) -> Result<(), Failure> {
    let q = request.qubits.unwrap_or(3);
    if q < 2 {
        return Err(usage(format!("--qubits must be at least 2, got {q}")));
    }
    let (circuit, record) = simon_circuit(q, rng)?;
    let outcome = simons_classical(q, &circuit, rng, None)?;
    let s = match outcome.candidates.first() {
        Some(candidate) if confirms_shift(&record.f_table, candidate) => candidate.clone(),
        _ => BitSeq::zeros(q),
    };
    let candidates: Vec<String> = outcome.candidates.iter().map(BitSeq::to_string).collect();
    trace.line(format!("candidate: {}", candidates.join(" ")));
    trace.line(format!("unique measurements: {}", outcome.unique_results.join(" ")));
    trace.line(format!("quantum runs: {}", outcome.runs));
    if s.is_zero() {
        trace.line(format!("\nConclusion: s = {s} (f is one-to-one)"));
    } else {
        trace.line(format!("\nConclusion: s = {s}"));
    }
    if request.reveal {
        trace.reveal(&BlackboxRecord::Simon(record));
    }
    Ok(())
}

fn search(request: &Request, rng: &mut ChaCha8Rng, trace: &mut Trace) -> Result<(), Failure> {
    let marked = request.marked_bits()?;
    let q = request.qubits.or(marked.as_ref().map(BitSeq::len)).unwrap_or(4);
    if q < 2 {
        return Err(usage(format!("--qubits must be at least 2, got {q}")));
    }
    let drawn = marked.is_none();
    let marked = match marked {
        Some(m) => m,
        None => to_binary(rng.gen_range(0..1usize << q), 1 << q)?,
    };
    let (mut circuit, plan) = grover(q, &marked)?;
    if !drawn {
        trace.line(format!("marked state: |{marked}>"));
    }
    trace.line(format!("Grover iterations: {}", plan.iterations));
    trace.heading("Final State");
    trace.state(&circuit, q)?;

    let main = circuit.register("q").expect("grover register").qubits();
    let c = circuit.register("c").expect("grover register").clone();
    for (i, x) in main.iter().enumerate() {
        circuit.measure(x, &c.clbit(i))?;
    }
    let counts = run_counts(&circuit, request.shots, RunSeed(rng.gen()))?;
    trace.heading("Measurement Results");
    trace.line(format_counts(&counts, request.column));
    if drawn && request.reveal {
        trace.line(format!("\nsneak peek: marked state |{marked}>"));
    }
    Ok(())
}

fn fourier(request: &Request, trace: &mut Trace) -> Result<(), Failure> {
    let mode = if request.paper_compat { QftMode::PaperCompat } else { QftMode::Standard };
    if let Some(marked) = request.marked_bits()? {
        if marked.len() != 2 {
            return Err(usage("the Fourier search demo needs a 2-bit --marked pattern"));
        }
        if request.paper_compat {
            return Err(usage("--paper-compat has no effect on the 2-qubit Fourier search"));
        }
        trace.line(format!("marked state: |{marked}>"));
        let state = qft_grover_demo(&marked)?;
        let opts = request.display.clone().with_systems(&[2, 1]).with_show_systems(&[true, false]);
        trace.heading("After QFT search");
        trace.line(format_wavefunction(&state, &opts)?);
        return Ok(());
    }
    let n = request.qubits.unwrap_or(3);
    if n == 0 {
        return Err(usage("--qubits must be at least 1"));
    }
    let mut circuit = Circuit::new("qc", vec![], vec![])?;
    let q = circuit.add_qreg("q", n)?.qubits();
    circuit.x(&q[n - 1])?;
    trace.heading("Initial State");
    trace.state(&circuit, n)?;
    qft(&mut circuit, &q, mode)?;
    trace.heading("After QFT");
    trace.state(&circuit, n)?;
    qft_dgr(&mut circuit, &q, mode)?;
    trace.heading("Inverse QFT");
    trace.state(&circuit, n)?;
    Ok(())
}

fn coin(request: &Request, rng: &mut ChaCha8Rng, trace: &mut Trace) -> Result<(), Failure> {
    let (heads, tails) = coin_flip(request.flips.unwrap_or(100), rng)?;
    let verdict = match heads.cmp(&tails) {
        std::cmp::Ordering::Greater => "Heads wins: Bob has some cleaning to do!",
        std::cmp::Ordering::Less => "Tails wins: tough luck Alice!",
        std::cmp::Ordering::Equal => "A draw.",
    };
    trace.line(verdict);
    trace.line(format!("Final Score -- Alice: {heads} Bob: {tails}"));
    Ok(())
}
