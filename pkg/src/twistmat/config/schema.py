"""Experiment configuration schema and validation."""

from typing import Any, Dict

VALID_QUOTIENTS = {"none", "mod_commutator_u", "mod_center_u4"}
VALID_FORMATS = {"json", "csv", "both"}
VALID_RING_KINDS = {"integers", "s_integers", "quadratic", "finite_field", "poly", "localized_poly"}
VALID_MAPS = {"psi_d2_plus", "psi_d2_minus", "abels3_phi", "identity"}

DEFAULT_SEED = 20240001


def _positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def _validate_quotient(quotient: Any) -> None:
    if isinstance(quotient, str):
        if quotient not in VALID_QUOTIENTS:
            raise ValueError(
                f"group.quotient must be one of {', '.join(sorted(VALID_QUOTIENTS))} or {{mod_ideal: ...}}"
            )
        return
    if isinstance(quotient, dict) and set(quotient) == {"mod_ideal"}:
        if not isinstance(quotient["mod_ideal"], (int, str)) or isinstance(quotient["mod_ideal"], bool):
            raise ValueError("group.quotient.mod_ideal must be a prime or a polynomial string")
        return
    raise ValueError("group.quotient must be a string or {mod_ideal: ...}")


def _validate_ring(ring: Any) -> None:
    if isinstance(ring, str):
        return  # JSON text, decoded by the ingest layer
    if not isinstance(ring, dict):
        raise ValueError("ring must be a mapping or a JSON string")
    if ring.get("kind") not in VALID_RING_KINDS:
        raise ValueError(f"ring.kind must be one of {', '.join(sorted(VALID_RING_KINDS))}")


def _validate_group(group: Dict[str, Any]) -> None:
    if "n" in group:
        n = group["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise ValueError("group.n must be an integer >= 2")
    if "set_i" in group:
        set_i = group["set_i"]
        if isinstance(set_i, str):
            set_i = [s for s in set_i.split(",") if s.strip()]
            try:
                set_i = [int(s) for s in set_i]
            except ValueError:
                raise ValueError("group.set_i must be a comma list of integers") from None
        if not isinstance(set_i, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in set_i):
            raise ValueError("group.set_i must be a list of integers")
        n = group.get("n")
        if isinstance(n, int) and any(not 1 <= i <= n for i in set_i):
            raise ValueError(f"group.set_i entries must lie in 1..{n}")
    if "quotient" in group:
        _validate_quotient(group["quotient"])


def _validate_params(params: Dict[str, Any]) -> None:
    if "seed" in params and (not isinstance(params["seed"], int) or isinstance(params["seed"], bool)):
        raise ValueError("params.seed must be an integer")
    for key in ("samples", "count", "aut_limit"):
        if key in params and not _positive_int(params[key]):
            raise ValueError(f"params.{key} must be a positive integer")
    if "limit" in params and params["limit"] is not None and not _positive_int(params["limit"]):
        raise ValueError("params.limit must be a positive integer")
    if "bound" in params:
        bound = params["bound"]
        if not isinstance(bound, int) or isinstance(bound, bool) or bound < 0:
            raise ValueError("params.bound must be a non-negative integer")
    if "exponent_bound" in params:
        bound = params["exponent_bound"]
        if not isinstance(bound, int) or isinstance(bound, bool) or bound < 0:
            raise ValueError("params.exponent_bound must be a non-negative integer")
    if "eps" in params and params["eps"] not in (0, 1):
        raise ValueError("params.eps must be 0 or 1")
    if "alpha" in params and not isinstance(params["alpha"], (dict, str)):
        raise ValueError("params.alpha must be a ring automorphism object")
    if "d_c" in params and params["d_c"] is not None:
        if not isinstance(params["d_c"], list) or not all(isinstance(u, (str, int)) for u in params["d_c"]):
            raise ValueError("params.d_c must be a list of unit strings or null")
    if "map" in params and params["map"] not in VALID_MAPS:
        raise ValueError(f"params.map must be one of {', '.join(sorted(VALID_MAPS))}")


def _validate_output(output: Dict[str, Any]) -> None:
    if "out_dir" in output and not isinstance(output["out_dir"], str):
        raise ValueError("output.out_dir must be a string")
    if "format" in output and output["format"] not in VALID_FORMATS:
        raise ValueError("output.format must be 'json', 'csv', or 'both'")
    if "name" in output and output["name"] is not None and not isinstance(output["name"], str):
        raise ValueError("output.name must be a string or null")


def validate_config(config: Dict[str, Any]) -> None:
    """Validate configuration structure and values.

    Raises ValueError if validation fails.
    """
    if "ring" not in config:
        raise ValueError("Missing 'ring' section")
    _validate_ring(config["ring"])

    if not isinstance(config.get("group"), dict):
        raise ValueError("Missing 'group' section")
    for key in ("n", "set_i", "quotient"):
        if key not in config["group"]:
            raise ValueError(f"Missing 'group.{key}'")
    _validate_group(config["group"])

    if not isinstance(config.get("automorphism"), (list, str)):
        raise ValueError("automorphism must be a list of atoms or a JSON string")

    if not isinstance(config.get("params"), dict):
        raise ValueError("Missing 'params' section")
    if "seed" not in config["params"]:
        raise ValueError("Missing 'params.seed'")
    _validate_params(config["params"])

    if not isinstance(config.get("output"), dict):
        raise ValueError("Missing 'output' section")
    _validate_output(config["output"])


def validate_patch(patch: Dict[str, Any]) -> None:
    """Validate a partial config patch.

    Raises ValueError if validation fails.
    """
    unknown = set(patch) - {"ring", "group", "automorphism", "params", "output"}
    if unknown:
        raise ValueError(f"Unknown config sections: {', '.join(sorted(unknown))}")
    if "ring" in patch and patch["ring"] is not None:
        _validate_ring(patch["ring"])
    for section, check in (("group", _validate_group), ("params", _validate_params), ("output", _validate_output)):
        if section in patch:
            if not isinstance(patch[section], dict):
                raise ValueError(f"{section} patch must be a mapping")
            check(patch[section])
