from kernelkit.routers.common import load_instance
from kernelkit.services.solver import min_weak


def register(subparsers) -> None:
    p = subparsers.add_parser("solve", help="exact minimum number of weak edges")
    p.add_argument("file", help="instance file, '-' for stdin")
    p.add_argument("--limit", type=int, default=None, help="largest edge count the solver accepts")
    p.set_defaults(handler=run)


def run(args) -> int:
    inst = load_instance(args.file)
    best, _ = min_weak(inst, args.limit)
    answer = "yes" if best <= inst.k else "no"
    print(f"{answer} (min_weak={best})")
    return 0 if answer == "yes" else 1
