from kernelkit.routers.common import load_instance, read_text
from kernelkit.services.labeling import is_valid
from kernelkit.utils.instance_format import parse_labeling


def register(subparsers) -> None:
    p = subparsers.add_parser("verify", help="check a labeling against an instance")
    p.add_argument("file", help="instance file")
    p.add_argument("labeling", help="labeling file")
    p.set_defaults(handler=run)


def run(args) -> int:
    inst = load_instance(args.file)
    L = parse_labeling(read_text(args.labeling), inst.graph, inst.c)
    ok = is_valid(inst.kind, inst.graph, L, inst.psi)
    print(f"{'valid' if ok else 'invalid'} (weak={L.weak_count}, k={inst.k})")
    return 0 if ok and L.weak_count <= inst.k else 1
