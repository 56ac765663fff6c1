"""Command line entry point: one subcommand per experiment, each writing JSON/CSV reports."""

import json
import logging
from contextlib import contextmanager
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Callable

import click
import yaml

from .automorphisms.automorphism import IDENTITY_AUT, abels3_phi, psi_d2
from .automorphisms.quotient import induce_on_quotient
from .clock.clock import Stopwatch
from .config.limits import DEFAULT_AUT_LIMIT, enumeration_limit
from .config.manager import ConfigManager, init_config_manager
from .errors import TwistmatError
from .format.formatter import (
    build_report,
    serialize_automorphism,
    serialize_element,
    serialize_superdiagonal_form,
    write_report,
    write_timing,
)
from .groups.finite import enumerate_finite_group
from .groups.fingen import all_index_sets, is_finitely_generated
from .groups.index_set import IndexSet
from .groups.relations import verify_relations
from .ingest.parser import (
    parse_automorphism,
    parse_element,
    parse_index_set,
    parse_quotient,
    parse_ring_automorphism,
    parse_ring_spec,
)
from .rings import polynomials as P
from .rings.automorphisms import ring_aut_search
from .rings.spec import RingSpec
from .twisted.autsearch import survey_automorphisms
from .twisted.fixed import fix_family_certify, fix_trivial_box_search
from .twisted.reidemeister import conjugacy_class_count, fixed_points_finite, reidemeister_classes_finite

logger = logging.getLogger(__name__)

# Above this order the Burnside cross-check (a full Cayley table) is skipped
CROSS_CHECK_MAX_ORDER = 5000

STANDARD_RINGS = (
    {"kind": "integers"},
    {"kind": "poly", "p": 2},
    {"kind": "localized_poly", "p": 2, "t_inverted": True},
    {"kind": "localized_poly", "p": 2, "t_inverted": True, "inverted": ["t^3+t+1"]},
)


def _setup_logging(out_dir: Path) -> None:
    """Configure logging with RotatingFileHandler (1 MB, 3 backups)."""
    root = logging.getLogger()
    root.setLevel(logging.INFO)
    if root.handlers:
        return
    log_dir = out_dir / "logs"
    log_dir.mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(log_dir / "twistmat.log", maxBytes=1024 * 1024, backupCount=3, encoding="utf-8")
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s [%(name)s] %(message)s"))
    root.addHandler(handler)


def _json_flag(value: str, flag: str) -> Any:
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        raise click.UsageError(f"{flag} is not valid JSON: {e}") from None


def _flag_patch(flags: dict[str, Any]) -> dict[str, Any]:
    """Translate command-line flags into a config patch; unset flags are skipped."""
    patch: dict[str, Any] = {}

    def put(section: str, key: str | None, value: Any) -> None:
        if value is None:
            return
        if key is None:
            patch[section] = value
        else:
            patch.setdefault(section, {})[key] = value

    ring = flags.pop("ring", None)
    if isinstance(ring, str):
        put("ring", None, _json_flag(ring, "--ring"))
    put("group", "n", flags.pop("n", None))
    set_i = flags.pop("set_i", None)
    if set_i is not None:
        try:
            put("group", "set_i", [int(s) for s in set_i.strip().strip("{}").split(",") if s.strip()])
        except ValueError:
            raise click.UsageError(f"--set-i must be a comma list of integers, got {set_i!r}") from None
    quotient = flags.pop("quotient", None)
    if quotient is not None:
        put("group", "quotient", _json_flag(quotient, "--quotient") if quotient.strip().startswith("{") else quotient)
    aut = flags.pop("aut", None)
    if aut is not None:
        put("automorphism", None, _json_flag(aut, "--aut"))
    alpha = flags.pop("alpha", None)
    if alpha is not None:
        put("params", "alpha", _json_flag(alpha, "--alpha") if alpha.strip().startswith("{") else alpha)
    d_c = flags.pop("d_c", None)
    if d_c is not None:
        put("params", "d_c", [u.strip() for u in d_c.split(",")])
    for key in ("seed", "samples", "bound", "exponent_bound", "count", "limit", "aut_limit", "eps", "map"):
        put("params", key, flags.pop(key, None))
    put("output", "out_dir", flags.pop("out_dir", None))
    put("output", "format", flags.pop("fmt", None))
    put("output", "name", flags.pop("name", None))
    return patch


class Run:
    """Parsed configuration and shared plumbing of one subcommand invocation."""

    def __init__(self, command: str, config_path: str | None, flags: dict[str, Any]) -> None:
        self.command = command
        try:
            manager: ConfigManager = init_config_manager(Path(config_path) if config_path else None)
            manager.apply_overrides(_flag_patch(flags))
            self.config = manager.get_config()
            self.ring = parse_ring_spec(self.config["ring"])
            group = self.config["group"]
            self.index_set = parse_index_set(group["n"], group["set_i"])
            self.quotient = parse_quotient(group["quotient"], self.ring)
        except (FileNotFoundError, yaml.YAMLError) as e:
            raise click.UsageError(str(e)) from None
        except ValueError as e:
            raise click.UsageError(str(e)) from None
        self.params = self.config["params"]
        output = self.config["output"]
        self.out_dir = Path(output["out_dir"])
        self.fmt = output["format"]
        self.stem = output["name"] or command
        self.seed = self.params["seed"]
        _setup_logging(self.out_dir)
        self.stopwatch = Stopwatch()

    def automorphism(self, ix: IndexSet | None = None, ring: RingSpec | None = None):
        try:
            return parse_automorphism(ix or self.index_set, ring or self.ring, self.config["automorphism"])
        except ValueError as e:
            raise click.UsageError(str(e)) from None

    @property
    def limit(self) -> int:
        return enumeration_limit(self.params["limit"])

    def emit(self, anchors: list[str], body: dict[str, Any], rows: list[dict[str, Any]], columns: list[str]) -> None:
        self.stopwatch.stop()
        report = build_report(self.command, self.config, self.seed, anchors, body)
        for path in write_report(self.out_dir, self.stem, report, rows, columns, self.fmt):
            click.echo(str(path))
        write_timing(self.out_dir, self.stem, self.stopwatch.elapsed, self.stopwatch.get_elapsed_display())
        logger.info("%s finished in %s", self.command, self.stopwatch.get_elapsed_display())


@contextmanager
def _computing(run: Run):
    """Map mathematical failures and limits to exit code 1."""
    run.stopwatch.start()
    try:
        yield
    except (TwistmatError, ValueError) as e:
        logger.error("%s failed: %s", run.command, e)
        click.echo(f"Error: {e}", err=True)
        raise SystemExit(1) from None


def common_options(func: Callable) -> Callable:
    options = [
        click.option("--config", "config_path", type=click.Path(dir_okay=False), help="YAML or JSON experiment config."),
        click.option("--ring", help='Ring spec JSON, e.g. \'{"kind":"s_integers","primes":[2,3]}\'.'),
        click.option("--n", "n", type=int, help="Matrix size."),
        click.option("--set-i", "set_i", help="Index set I as a comma list."),
        click.option("--quotient", help="none, mod_commutator_u, mod_center_u4 or JSON {\"mod_ideal\": ...}."),
        click.option("--aut", help="Automorphism as a JSON atom list."),
        click.option("--seed", type=int),
        click.option("--samples", type=int),
        click.option("--bound", type=int),
        click.option("--count", type=int),
        click.option("--limit", type=int, help="Enumeration cap (TWISTMAT_LIMIT wins)."),
        click.option("--out-dir", "out_dir"),
        click.option("--format", "fmt", type=click.Choice(["json", "csv", "both"])),
        click.option("--name", help="Report file stem."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.version_option(package_name="twistmat")
def main() -> None:
    """Exact experiments on S_n^I(R), its automorphisms and twisted conjugacy."""


@main.command("verify-relations")
@common_options
def verify_relations_cmd(config_path: str | None, **flags: Any) -> None:
    """Check the defining relations on random samples."""
    run = Run("verify-relations", config_path, flags)
    with _computing(run):
        results = verify_relations(run.ring, run.index_set, run.params["samples"], run.seed)
    rows = [r.as_row() for r in results]
    body = {
        "ring": run.ring.to_json(),
        "n": run.index_set.n,
        "set_i": run.index_set.label,
        "relations": rows,
        "passed": all(r.passed for r in results),
    }
    run.emit(["d e_ij(r) d^-1 = e_ij(u_i u_j^-1 r)", "[e_ij(r), e_jk(s)] = e_ik(rs)"], body, rows,
             ["relation", "samples", "failures", "passed", "first_failure"])
    if not body["passed"]:
        raise SystemExit(1)


@main.command("reidemeister")
@common_options
def reidemeister_cmd(config_path: str | None, **flags: Any) -> None:
    """Count twisted conjugacy classes of a finite S_n^I(F_q) or one of its quotients."""
    run = Run("reidemeister", config_path, flags)
    phi = run.automorphism()
    with _computing(run):
        group = enumerate_finite_group(run.index_set, run.ring, run.quotient, run.limit)
        if run.quotient.kind != "none":
            phi = induce_on_quotient(phi, run.quotient, run.index_set, run.ring, seed=run.seed)
        report = reidemeister_classes_finite(group, phi)
        fixed = fixed_points_finite(group, phi)
        classes = None
        if not phi.atoms and len(group) <= CROSS_CHECK_MAX_ORDER:
            classes = conjugacy_class_count(group)
    row = {**report.as_row(), "fixed_points": len(fixed)}
    body = {
        "group": report.group,
        "order": report.order,
        "automorphism": serialize_automorphism(phi),
        "reidemeister": report.count,
        "class_sizes": report.sizes,
        "representatives": [serialize_element(group.elements[k]) for k in report.representatives],
        "fixed_points": len(fixed),
        "conjugacy_classes": classes,
    }
    run.emit(["R(phi) = number of orbits of g.x = g x phi(g)^-1", "Fix(phi) = {g : phi(g) = g}"], body, [row],
             ["group", "order", "automorphism", "reidemeister", "fixed_points"])
    if classes is not None and classes != report.count:
        click.echo(f"Error: R(id) = {report.count} but Burnside counts {classes} classes", err=True)
        raise SystemExit(1)


@main.command("fix-family")
@common_options
@click.option("--eps", type=click.IntRange(0, 1), help="Include the flip (1) or not (0).")
@click.option("--alpha", help="Ring automorphism: id, quad_conj or JSON.")
@click.option("--d-c", "d_c", help="Comma list of the n diagonal units of d^c.")
def fix_family_cmd(config_path: str | None, **flags: Any) -> None:
    """Certify an infinite family of fixed points on U_n/U_n'."""
    run = Run("fix-family", config_path, flags)
    params = run.params
    try:
        alpha = parse_ring_automorphism(params["alpha"])
        d_c = None if params["d_c"] is None else [parse_element(run.ring, u) for u in params["d_c"]]
    except ValueError as e:
        raise click.UsageError(str(e)) from None
    with _computing(run):
        cert = fix_family_certify(run.index_set.n, run.index_set, run.ring, params["eps"], alpha, d_c,
                                  params["count"], run.seed)
    verdict = cert.finite_generation
    row = {
        "ring": run.ring.label,
        "n": run.index_set.n,
        "set_i": run.index_set.label,
        "eps": params["eps"],
        "alpha": alpha.label,
        "verified": cert.verified,
        "count": cert.count,
        "finitely_generated": verdict.verdict,
    }
    body = {
        "quotient": cert.quotient,
        "automorphism": serialize_automorphism(cert.automorphism),
        "parameters": cert.parameters,
        "d_c": [str(u) for u in cert.d_c],
        "verified": cert.verified,
        "count": cert.count,
        "finite_generation": {
            "verdict": verdict.verdict,
            "condition": verdict.condition,
            "failing_clause": verdict.failing_clause,
            "citation": verdict.facts.citation,
        },
        "residual_finiteness": cert.residual_finiteness,
        "infinite_reidemeister": cert.infinite_reidemeister,
    }
    run.emit(["e_bar_12(s) e_bar_(n-1)n(s) is fixed for every s in S",
              "|Fix(phi)| infinite in a f.g. residually finite group forces R(phi) infinite"],
             body, [row], list(row))


@main.command("ring-aut-search")
@common_options
def ring_aut_search_cmd(config_path: str | None, **flags: Any) -> None:
    """Search automorphisms of F_p[t, t^-1, f^-1] with exponents bounded by --bound."""
    run = Run("ring-aut-search", config_path, flags)
    ring = run.ring
    with _computing(run):
        survivors = ring_aut_search(ring, run.params["bound"], run.seed)
    f = ring.inverted[0]
    rows = [{"ring": ring.label, "descriptor": desc.label} for desc in survivors]
    body = {
        "ring": ring.to_json(),
        "bound": run.params["bound"],
        "f": P.format_poly(f),
        "f_irreducible": P.is_irreducible(f, ring.p),
        "f_reciprocal": P.format_poly(P.reciprocal_poly(f, ring.p)),
        "f_self_reciprocal": P.is_self_reciprocal(f, ring.p),
        "survivors": [desc.to_json() for desc in survivors],
        "count": len(survivors),
    }
    run.emit(["ring automorphisms send units to units: t -> lam t^a f^b, f -> mu t^c f^d"], body, rows,
             ["ring", "descriptor"])


@main.command("fingen-table")
@common_options
@click.option("--standard-rings", is_flag=True, help="Use Z, F2[t], F2[t,t^-1] and F2[t,t^-1,(t^3+t+1)^-1].")
def fingen_table_cmd(config_path: str | None, standard_rings: bool, **flags: Any) -> None:
    """Finite generation verdict for every I in {1..n}, per ring."""
    run = Run("fingen-table", config_path, flags)
    rings = [parse_ring_spec(obj) for obj in STANDARD_RINGS] if standard_rings else [run.ring]
    n = run.index_set.n
    with _computing(run):
        rows = [is_finitely_generated(ring, ix).as_row(ring, ix) for ring in rings for ix in all_index_sets(n)]
    body = {"n": n, "rings": [ring.to_json() for ring in rings], "rows": rows}
    run.emit(["(i) (R,+) finitely generated, or (ii) U(R) f.g., R f.g. over Z[U(R)] and I satisfies (NG)"],
             body, rows, ["ring", "n", "set_i", "verdict", "condition", "failing_clause"])


BOX_MAPS = {
    "psi_d2_plus": lambda ring: psi_d2(ring, 1),
    "psi_d2_minus": lambda ring: psi_d2(ring, -1),
    "abels3_phi": lambda ring: abels3_phi(),
    "identity": lambda ring: IDENTITY_AUT,
}


@main.command("box-search")
@common_options
@click.option("--map", "map", type=click.Choice(sorted(BOX_MAPS)), help="Named automorphism of S_3^{2}.")
@click.option("--exponent-bound", "exponent_bound", type=int, help="Denominator exponent bound for Z[1/S].")
def box_search_cmd(config_path: str | None, **flags: Any) -> None:
    """Scan a coordinate box of unipotent elements of S_3^{2}(R) for fixed points."""
    run = Run("box-search", config_path, flags)
    abels3 = IndexSet.of(3, {2})
    phi = run.automorphism(abels3) if run.config["automorphism"] else BOX_MAPS[run.params["map"]](run.ring)
    with _computing(run):
        report = fix_trivial_box_search(phi, run.ring, run.params["bound"], run.params["exponent_bound"])
    rows = [{"x": str(g.entry(1, 2)), "y": str(g.entry(2, 3)), "z": str(g.entry(1, 3))} for g in report.fixed]
    body = {
        "automorphism": serialize_automorphism(phi),
        "ring": run.ring.to_json(),
        "bound": report.bound,
        "exponent_bound": report.exponent_bound,
        "box_size": report.box_size,
        "fixed": [serialize_element(g) for g in report.fixed],
        "only_identity": report.only_identity,
    }
    run.emit(["in a f.g. torsion-free nilpotent group R(phi) is finite iff Fix(phi) = 1"], body, rows, ["x", "y", "z"])


@main.command("aut-enum")
@common_options
@click.option("--aut-limit", "aut_limit", type=int, help=f"Largest group to search (default {DEFAULT_AUT_LIMIT}).")
def aut_enum_cmd(config_path: str | None, **flags: Any) -> None:
    """Enumerate Aut(G) for a small finite S_n^I(F_q) quotient and test superdiagonal form."""
    run = Run("aut-enum", config_path, flags)
    with _computing(run):
        group = enumerate_finite_group(run.index_set, run.ring, run.quotient, run.limit)
        survey = survey_automorphisms(group, run.params["aut_limit"])
    slots = range(1, run.index_set.n)
    rows = []
    for k, form in enumerate(survey.forms or [None] * survey.count):
        rows.append({
            "automorphism": k,
            "superdiagonal": form is not None,
            "sigma": "" if form is None else ",".join(str(s) for s in form.sigma),
        })
    body = {
        "group": survey.group,
        "order": survey.order,
        "count": survey.count,
        "superdiagonal_checked": bool(survey.forms),
        "all_superdiagonal": survey.all_superdiagonal if survey.forms else None,
        "slot_fixed_counts": {str(k): survey.slot_fixed_count(k) for k in slots} if survey.forms else {},
        "forms": [serialize_superdiagonal_form(form) for form in survey.forms],
    }
    run.emit(["phi(e_bar_ij(r)) = e_bar_sigma(ij)(Phi_ij(r))"], body, rows, ["automorphism", "superdiagonal", "sigma"])


if __name__ == "__main__":
    main()
