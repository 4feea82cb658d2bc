# commands.py
"""
Comandi della CLI: params, list, eval, verify, figure, system.

Opzioni globali: --config <file JSON>, --json, --seed <int>.
Exit code: 0 successo, 1 verifica fallita, 2 input non valido.
"""
import json
import logging
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click
from dotenv import load_dotenv


# --- Variabili d'ambiente ---
# Il .env viene letto solo se l'ambiente non è già stato impostato dall'esterno.
if not os.getenv("SOLITON_ENV"):
    load_dotenv()

logging.basicConfig(level=logging.INFO, format="%(levelname)s:%(name)s:%(message)s")
log = logging.getLogger(__name__)

from app.cas import (  # noqa: E402
    AuxVariant,
    all_vanish,
    build_mefm_system,
    build_sg_system,
    check_candidate,
    published_assignment,
    theorem1_counts,
)
from app.catalog import evaluate, evaluate_jet, list_families, resolve  # noqa: E402
from app.errors import UnsupportedOrder  # noqa: E402
from app.figures import FORMATS, emit_preset, get_preset  # noqa: E402
from app.models.family import Branch, FamilyId, FamilyInputs, Method  # noqa: E402
from app.models.materials import (  # noqa: E402
    MATERIAL_SETS,
    DerivedParameters,
    MaterialConstants,
    derive_parameters,
)
from app.utils.decorators import (  # noqa: E402
    EXIT_VERIFY_FAILED,
    cli_errors,
)
from app.utils.rational import format_float  # noqa: E402
from app.verify import GridSpec, Status, default_inputs, identity_suite, verify_catalog  # noqa: E402
from app_factory import SolitonApp, create_app  # noqa: E402


_CASE_PATTERN = re.compile(r"^(sg|mefm)\.case(\d+)(?:\.(plus|minus))?$")


@dataclass
class CliState:
    app: SolitonApp
    data: Dict[str, Any] = field(default_factory=dict)
    as_json: bool = False
    seed: Optional[int] = None


# --- 1. Lettura del file di configurazione ---


def load_config_file(path: Optional[str]) -> Dict[str, Any]:
    """
    Legge il file JSON con gli oggetti "material", "family" e "inputs".

    Raises:
        ValueError: JSON non valido o radice non oggetto.
    """
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: atteso un oggetto JSON")
    return data


def material_from(data: Dict[str, Any]) -> Tuple[MaterialConstants, DerivedParameters]:
    """
    "material" può essere {"preset": "A"|"B"} oppure le nove costanti.
    Senza "material" si usa il set A.
    """
    raw = data.get("material")
    if raw is None:
        constants = MATERIAL_SETS["A"]
    elif isinstance(raw, dict) and set(raw) == {"preset"}:
        key = str(raw["preset"]).upper()
        if key not in MATERIAL_SETS:
            raise ValueError(f"preset di materiale sconosciuto: {raw['preset']!r}")
        constants = MATERIAL_SETS[key]
    elif isinstance(raw, dict):
        constants = MaterialConstants.from_mapping(raw)
    else:
        raise ValueError("'material' deve essere un oggetto JSON")
    return constants, derive_parameters(constants)


def parse_assignments(pairs: Tuple[str, ...]) -> Dict[str, str]:
    out = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise ValueError(f"parametro non valido: {pair!r} (atteso nome=valore)")
        out[key.strip()] = value.strip()
    return out


def inputs_for(
    state: CliState, family: FamilyId, overrides: Optional[Dict[str, Any]] = None
) -> FamilyInputs:
    """Input di default della famiglia, poi il file di configurazione, poi la riga di comando."""
    _, material = material_from(state.data)
    base = default_inputs(family, material)
    values: Dict[str, Any] = dict(state.data.get("inputs") or {})
    values.update(overrides or {})
    if not values:
        return base
    given = FamilyInputs.from_mapping(material, values)
    changes = {
        name: getattr(given, name)
        for name in ("mu", "lam", "tau", "sigma", "e", "Q0", "Q1")
        if getattr(given, name) is not None
    }
    return base.with_values(**changes)


def emit(data: Any) -> None:
    click.echo(json.dumps(data, indent=2, sort_keys=True))


def _complex(value: complex, digits: int) -> Dict[str, str]:
    return {"re": format_float(value.real, digits), "im": format_float(value.imag, digits)}


# --- 2. Gruppo principale ---


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True, help="Output JSON su stdout.")
@click.option("--seed", type=int, default=None, help="Seme dei campioni casuali.")
@click.pass_context
@cli_errors
def cli(ctx: click.Context, config_path: Optional[str], as_json: bool, seed: Optional[int]) -> None:
    """Solitoni dell'equazione d'onda dispersiva in un'asta di Murnaghan."""
    app = ctx.obj.app if isinstance(ctx.obj, CliState) else create_app()
    ctx.obj = CliState(app=app, data=load_config_file(config_path), as_json=as_json, seed=seed)


@cli.command("params")
@click.argument("config_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@cli_errors
def params_command(state: CliState, config_file: Optional[str]) -> None:
    """Parametri derivati esatti ("p/q") e approssimazioni decimali."""
    data = load_config_file(config_file) if config_file else state.data
    constants, derived = material_from(data)
    emit(
        {
            "constants": constants.to_dict(),
            "derived": derived.to_dict(),
            "decimal": derived.to_decimal_dict(),
        }
    )


@cli.command("list")
@click.pass_obj
@cli_errors
def list_command(state: CliState) -> None:
    """Elenco delle famiglie del catalogo (entrambi i rami)."""
    entries = list_families()
    if state.as_json:
        emit([entry.to_dict() for entry in entries])
        return
    width = max(len(str(entry.family)) for entry in entries)
    for entry in entries:
        click.echo(
            f"{str(entry.family):<{width}}  {entry.classification.value:<38}  "
            f"{','.join(entry.free):<28}  {entry.constraint}"
        )
    click.echo(f"--- Totale: {len(entries)} ---")


@cli.command("eval")
@click.argument("family_id")
@click.option("--x", "x", type=float, required=True)
@click.option("--t", "t", type=float, required=True)
@click.option("--param", "-p", "params", multiple=True, help="Sostituzione nome=valore.")
@click.option("--jet", "with_jet", is_flag=True, help="Riporta anche le derivate in xi.")
@click.pass_obj
@cli_errors
def eval_command(
    state: CliState, family_id: str, x: float, t: float, params: Tuple[str, ...], with_jet: bool
) -> None:
    """Valuta Phi(x, t) per una famiglia."""
    family = resolve(family_id)
    inputs = inputs_for(state, family, parse_assignments(params))
    digits = state.app.config.FLOAT_DIGITS
    value = evaluate(family, inputs, x, t)
    out: Dict[str, Any] = {"family": str(family), "x": x, "t": t, "value": _complex(value, digits)}
    if with_jet:
        jet = evaluate_jet(family, inputs, x, t)
        out["jet"] = [_complex(d, digits) for d in jet.derivatives()]
    if state.as_json:
        emit(out)
        return
    click.echo(f"{family} ({x:g}, {t:g}) = {out['value']['re']} + {out['value']['im']}i")
    for k, d in enumerate(out.get("jet", [])):
        click.echo(f"  u^({k}) = {d['re']} + {d['im']}i")


@cli.command("verify")
@click.option("--grid", "grid_text", default=None, help="Conteggi della griglia, es. 10x5.")
@click.option("--tol", type=float, default=None, help="Tolleranza relativa.")
@click.option("--family", "families", multiple=True, help="Famiglia da verificare.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--allow-errata", is_flag=True, help="FLAGGED_ERRATUM non cambia l'exit code.")
@click.option("--identities", is_flag=True, help="Esegue anche il controllo delle identità.")
@click.pass_obj
@cli_errors
def verify_command(
    state: CliState,
    grid_text: Optional[str],
    tol: Optional[float],
    families: Tuple[str, ...],
    as_json: bool,
    allow_errata: bool,
    identities: bool,
) -> None:
    """Verifica per residui delle famiglie del catalogo."""
    nx, nt = (None, None) if grid_text is None else GridSpec.parse_counts(grid_text)
    grid = state.app.grid_spec(nx=nx, nt=nt, tolerance=tol, seed=state.seed)
    selected = [resolve(f) for f in families] if families else None
    reports = verify_catalog(
        grid, inputs_for=lambda fid: inputs_for(state, fid), families=selected
    )
    checks = identity_suite() if identities else []

    if as_json or state.as_json:
        payload: Any = [r.to_dict() for r in reports]
        if identities:
            payload = {"reports": payload, "identities": [c.to_dict() for c in checks]}
        emit(payload)
    else:
        for r in reports:
            click.echo(
                f"{str(r.family):<28} {r.status.value:<16} "
                f"pde={r.max_abs_pde_residual:.3e} ode={r.max_abs_ode_residual:.3e} "
                f"saltati={r.points_skipped_near_singularity}/{r.points_sampled}  {r.notes}"
            )
        for c in checks:
            click.echo(f"identità {c.name:<30} {'ok' if c.passed else 'FALLITA'} ({c.max_error:.3e})")

    failed = any(r.status is Status.FAIL for r in reports)
    flagged = any(r.status is Status.FLAGGED_ERRATUM for r in reports)
    broken = any(not c.passed for c in checks)
    if failed or broken or (flagged and not allow_errata):
        raise SystemExit(EXIT_VERIFY_FAILED)


@cli.command("figure")
@click.argument("preset_id")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv")
@click.pass_obj
@cli_errors
def figure_command(state: CliState, preset_id: str, out_dir: Optional[str], fmt: str) -> None:
    """Scrive i dataset di un preset (fig1..fig11) e il relativo manifest."""
    preset = get_preset(preset_id)
    out = Path(out_dir) if out_dir else Path(state.app.config.OUTPUT_DIR) / preset.id
    manifest = emit_preset(preset, out, fmt, state.app.figure_settings())
    if state.as_json:
        emit({"preset": preset.id, "manifest": str(manifest)})
    else:
        click.echo(str(manifest))


def _parse_case(text: str) -> Tuple[Method, int, Branch]:
    match = _CASE_PATTERN.match(text.strip().lower())
    if not match:
        raise ValueError(f"caso non valido: {text!r} (atteso es. mefm.case13 o sg.case1.plus)")
    method = Method.SINE_GORDON if match.group(1) == "sg" else Method.MEFM
    branch = Branch(match.group(3)) if match.group(3) else Branch.PLUS
    return method, int(match.group(2)), branch


@cli.command("system")
@click.argument("kind", type=click.Choice(["sg", "mefm"]))
@click.argument("order", type=int, required=False, default=1)
@click.argument("aux", type=click.Choice([v.value for v in AuxVariant]), required=False)
@click.option("--check", "case_id", default=None, help="Caso da sostituire, es. mefm.case13.")
@click.pass_obj
@cli_errors
def system_command(
    state: CliState, kind: str, order: int, aux: Optional[str], case_id: Optional[str]
) -> None:
    """Conteggi del sistema algebrico e, con --check, residui di un caso pubblicato."""
    cap = state.app.config.MAX_SYSTEM_M
    if kind == "sg":
        system = build_sg_system()
        predicted: Optional[Tuple[int, int]] = None
    else:
        if not 1 <= order <= cap:
            raise UnsupportedOrder(order, cap)
        system = build_mefm_system(order, AuxVariant(aux or AuxVariant.FULL.value))
        predicted = theorem1_counts(order)
    equations, unknowns = system.counts

    results = []
    if case_id:
        method, case_no, branch = _parse_case(case_id)
        if method is not system.kind:
            raise ValueError(f"il caso {case_id} non appartiene al sistema {kind}")
        assignment = published_assignment(method, case_no, branch)
        results = check_candidate(system, assignment, seed=state.seed or 0)

    if state.as_json:
        out: Dict[str, Any] = {
            "kind": kind,
            "M": system.M,
            "aux": system.aux.value if system.aux else None,
            "equations": equations,
            "unknowns": unknowns,
            "predicted": None if predicted is None else list(predicted),
            "system": system.to_json(),
        }
        if case_id:
            out["check"] = {
                "case": case_id,
                "all_zero": all_vanish(results),
                "residuals": [r.to_dict() for r in results],
            }
        emit(out)
    elif predicted is None:
        click.echo(f"equations: {equations}, unknowns: {unknowns}")
    else:
        marks = ["" if a == b else ", differs" for a, b in zip((equations, unknowns), predicted)]
        click.echo(
            f"equations: {equations} (predicted {predicted[0]}{marks[0]}), "
            f"unknowns: {unknowns} (predicted {predicted[1]}{marks[1]})"
        )
    if results and not state.as_json:
        for r in results:
            click.echo(f"  [{r.index}] {r.label:<10} {r.verdict.value}")
        click.echo("all residuals zero" if all_vanish(results) else "some residuals nonzero")


def main(args: Optional[List[str]] = None) -> None:
    cli.main(args=args, prog_name="soliton")


if __name__ == "__main__":  # pragma: no cover
    main()
