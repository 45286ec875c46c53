"""Recompute the five worked examples and print what each one shows.

    python3 scripts/reproduce_examples.py
"""
from quasicrypt.catalog import example_table
from quasicrypt.construction import construct_suitable
from quasicrypt.properties import count_associative_triples, is_polynomially_complete
from quasicrypt.subquasigroups import diagonal_core, find_all_subquasigroups, generated_by


def one_based(sets):
    return [sorted(v + 1 for v in W) for W in sets]


def main():
    report = find_all_subquasigroups(example_table(1))
    print("Example 1 subquasigroups:", one_based(report.subquasigroups))
    for step in report.steps:
        if step.phase != "sweep":
            print(f"  row {step.row + 1:>2} {step.phase:<5} candidates={step.candidates}"
                  f" found={one_based(step.found)}")
    print("  restart rows:", [r + 1 for r in report.restart_rows])

    trace = generated_by(example_table(2), 1)
    print("Example 2 chain from 2:", one_based(trace.chain))
    print("Example 2 diagonal core:", sorted(v + 1 for v in diagonal_core(example_table(2))))

    Q3 = example_table(3)
    print("Example 3 diagonal core:", sorted(v + 1 for v in diagonal_core(Q3)))
    print("Example 3 subquasigroups:", find_all_subquasigroups(Q3).subquasigroups)

    for k, (m, c) in ((4, (3, 1)), (5, (5, 4))):
        Q, params, roots = construct_suitable(2, 3, m=m, c=c)
        print(f"Example {k}: m={m} c={c} matches printed table: {Q == example_table(k)}")
        print(f"  circulant rank {roots.rank}, roots {[x.tag for x in roots.roots]}")
        print(f"  subquasigroups {find_all_subquasigroups(Q).subquasigroups}")
        print(f"  polynomially complete {is_polynomially_complete(Q)},"
              f" associative triples {count_associative_triples(Q)}")


if __name__ == "__main__":
    main()
