"""Print the multiplicity map of [3, 4, 1] from every exact backend side by side."""
from tapesum.core import Backend, Instance
from tapesum.harness import EXACT_BACKENDS, multiplicity_map
from tapesum.oracle import enumerate_subsets


def main():
    inst = Instance((3, 4, 1))
    truth = enumerate_subsets(inst).counts
    maps = {b.value: multiplicity_map(inst, b) for b in EXACT_BACKENDS}
    maps[Backend.TAPE_BOOL.value] = multiplicity_map(inst, Backend.TAPE_BOOL)
    names = list(maps)
    print("sum  oracle  " + "  ".join(f"{n:>16}" for n in names))
    for j in range(inst.total + 2):
        row = "  ".join(f"{maps[n].get(j, 0):>16}" for n in names)
        print(f"{j:>3}  {truth.get(j, 0):>6}  {row}")
    assert all(m == truth for n, m in maps.items() if n != Backend.TAPE_BOOL.value)


if __name__ == "__main__":
    main()
