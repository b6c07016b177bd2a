from kernelkit.routers.common import load_instance
from kernelkit.services.harness import kernelize


def register(subparsers) -> None:
    p = subparsers.add_parser("check-bounds", help="run the kernel and check its size bound")
    p.add_argument("file")
    p.add_argument("--param", choices=("xi", "coc"), default="xi")
    p.set_defaults(handler=run)


def run(args) -> int:
    inst = load_instance(args.file)
    outcome = kernelize(inst, args.param)
    g = outcome.reduced.graph
    edge_part = "" if outcome.edge_bound is None else f", m={g.m} <= {outcome.edge_bound}"
    status = "ok" if outcome.bound_holds else "VIOLATED"
    print(f"{status}: n={g.n} <= {outcome.bound}{edge_part} (decision={outcome.decision})")
    return 0 if outcome.bound_holds else 1
