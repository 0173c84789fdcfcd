//! Benchmark inputs shared by the criterion suites.

use combproof::Proposition;

/// `(a1 | ~a1) & ... & (an | ~an)`.
pub fn excluded_middles(n: usize) -> Proposition {
    (1..=n)
        .map(|i| {
            let a = Proposition::var(format!("a{i}"));
            Proposition::or(a.clone(), Proposition::not(a))
        })
        .reduce(Proposition::and)
        .expect("n must be positive")
}

/// `((a1 -> a2) & (a2 -> a3) & ... ) -> (a1 -> an)`.
pub fn implication_chain(n: usize) -> Proposition {
    let var = |i: usize| Proposition::var(format!("a{i}"));
    let premises = (1..n)
        .map(|i| Proposition::implies(var(i), var(i + 1)))
        .reduce(Proposition::and)
        .expect("n must be at least 2");
    Proposition::implies(premises, Proposition::implies(var(1), var(n)))
}
