"""Show how too few samples fold distinct sums onto the same bin."""
from tapesum.spectral import LazyProduct, convolution_read, expand_spectrum


def main():
    sig = LazyProduct((3, 5))
    spec = expand_spectrum(sig)
    print("impulses:", dict(sorted(spec.impulses.items())), "span", sig.span)
    for K in (6, 8, 9, 12):
        vals = [convolution_read(sig, b, K, check=False).real for b in range(0, 9)]
        flag = "ok" if K > sig.span else "aliased"
        print(f"K={K:>2} {flag:>7}: " + " ".join(f"{v:5.2f}" for v in vals))


if __name__ == "__main__":
    main()
