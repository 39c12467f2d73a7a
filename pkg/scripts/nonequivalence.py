"""Compare weight-3 counts of the quasi-cyclic codes with the chain codes of equal shape."""

from doobcodes.analysis import weight3_last_part
from doobcodes.constructions import alt_d707, base_d814, delta_step, increase_npp, quasi_cyclic


def chain(delta):
    M = base_d814()
    while M.rows < delta:
        M = delta_step(M)
    return increase_npp(M, M.shape.nprime)


def main():
    rows = [("qc, delta=3", quasi_cyclic(3)), ("chain, delta=3", chain(3)), ("alt, delta=3", alt_d707())]
    rows += [("qc, delta=5", quasi_cyclic(5)), ("chain, delta=5", chain(5))]
    for label, M in rows:
        w = weight3_last_part(M)
        s = M.shape
        print(f"{label:16s} ({s.m},{s.nprime},{s.npp}) order2={w.order2_count} order4={w.order4_count}")


if __name__ == "__main__":
    main()
