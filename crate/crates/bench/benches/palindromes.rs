use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use palrich::palindrome::{index_word, is_rich};
use palrich::{Morphism, Word};

fn fibonacci(n: usize) -> Word {
    let phi: Morphism = "0->01;1->0".parse().unwrap();
    phi.fixed_point_prefix(0, n).unwrap()
}

/// Distinct palindromes by checking every factor, for comparison.
fn naive_count(u: &[u32]) -> usize {
    let mut seen = std::collections::HashSet::new();
    seen.insert(&u[..0]);
    for i in 0..u.len() {
        for j in i + 1..=u.len() {
            let f = &u[i..j];
            if f.iter().eq(f.iter().rev()) {
                seen.insert(f);
            }
        }
    }
    seen.len()
}

fn palindrome_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("distinct_palindromes");
    for n in [100, 400, 1600] {
        let u = fibonacci(n);
        group.bench_with_input(BenchmarkId::new("eertree", n), &u, |b, u| {
            b.iter(|| index_word(u).distinct_count())
        });
        group.bench_with_input(BenchmarkId::new("naive", n), &u, |b, u| {
            b.iter(|| naive_count(u.letters()))
        });
    }
    group.finish();

    let long = fibonacci(1_000_000);
    c.bench_function("is_rich/fibonacci_1e6", |b| b.iter(|| is_rich(&long)));
}

criterion_group!(benches, palindrome_counting);
criterion_main!(benches);
