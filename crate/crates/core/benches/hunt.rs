use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use icp_core::families;
use icp_core::graph::Graph;
use icp_core::harness::{check_graph, hunt, CheckOptions, HuntOptions, Scope};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random triangle-free graphs on 9 vertices: edges are added in random order
/// whenever they close no triangle.
fn corpus(count: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    for _ in 0..count {
        let n = 9;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut adj = vec![vec![false; n]; n];
        for _ in 0..40 {
            let u = rng.gen_range(0..n);
            let w = rng.gen_range(0..n);
            if u == w || adj[u][w] || (0..n).any(|x| adj[u][x] && adj[w][x]) {
                continue;
            }
            adj[u][w] = true;
            adj[w][u] = true;
            edges.push((u, w));
        }
        out.push_str(&Graph::from_edges(n, edges).unwrap().to_graph6());
        out.push('\n');
    }
    out
}

fn bench_hunt(c: &mut Criterion) {
    let input = corpus(200, 11);
    let mut group = c.benchmark_group("hunt");
    group.sample_size(10);
    for jobs in [1usize, 4] {
        let label = if jobs == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::new(label, jobs), &jobs, |b, &jobs| {
            let opts = HuntOptions { jobs, ..HuntOptions::default() };
            b.iter(|| hunt(black_box(input.as_bytes()), &opts, |_| {}).unwrap())
        });
    }
    group.finish();
}

fn bench_check(c: &mut Criterion) {
    let g = families::grotzsch();
    let opts = CheckOptions { scope: Scope::All, ..CheckOptions::default() };
    let mut group = c.benchmark_group("check_graph");
    group.sample_size(10);
    group.bench_function("grotzsch", |b| b.iter(|| check_graph(black_box(&g), &opts)));
    group.finish();
}

criterion_group!(benches, bench_hunt, bench_check);
criterion_main!(benches);
