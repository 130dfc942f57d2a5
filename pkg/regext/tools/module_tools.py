"""
Module Tools for regext

Dictionary-returning operations on graded modules: invariants, Ext modules,
the homological degree, verification and corpus generation. They back both
the MCP server and the command line; errors are returned, never raised.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from regext.config import EngineSettings, load_settings
from regext.data.corpus import (
    REFERENCE_MODULES,
    CorpusParams,
    generate_corpus,
    get_reference_module,
    list_reference_modules,
    save_corpus,
)
from regext.tools.verification import analyze_instance, options_from_settings, split_reports
from regext.utils.cohomology import ExtModule, ext_into_ring, ext_module, shape_window
from regext.utils.degrees import hdeg
from regext.utils.hilbert import hilbert_poly
from regext.utils.presentation import GradedModulePresentation
from regext.utils.presentation_io import emit_presentation, parse_presentation, read_presentation
from regext.utils.resolution import betti_table, invariants
from regext.utils.ring import AlgebraError

logger = logging.getLogger(__name__)

settings: Optional[EngineSettings] = None
data_dir: Optional[Path] = None


def initialize_module_tools(data_directory: Path, engine_settings: Optional[EngineSettings] = None):
    """Initialize the module tools with a data directory and settings."""
    global settings, data_dir
    data_dir = data_directory
    settings = engine_settings or load_settings()


def _settings() -> EngineSettings:
    return settings or load_settings()


def _resolve(file_path: str) -> Path:
    if os.path.isabs(file_path) or data_dir is None:
        return Path(file_path)
    return data_dir / file_path


def load_module(
    presentation: Optional[str] = None, file_path: Optional[str] = None, reference: Optional[str] = None
) -> GradedModulePresentation:
    """
    A module from presentation text, a file or a reference name (exactly one).

    Raises:
        ValueError: If not exactly one source is given
        FileNotFoundError: If the file does not exist
        PresentationParseError: On malformed text
    """
    sources = [value for value in (presentation, file_path, reference) if value]
    if len(sources) != 1:
        raise ValueError("Give exactly one of presentation, file_path or reference")
    if presentation:
        return parse_presentation(presentation)
    if reference:
        return get_reference_module(reference)
    path = _resolve(file_path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return read_presentation(path)


def summarize_module(M: GradedModulePresentation) -> Dict[str, Any]:
    """Invariants, Betti table, Hilbert data and hdeg of M as JSON-ready values."""
    table = betti_table(M)
    data = hilbert_poly(M)
    summary = invariants(M).model_dump(mode="json")
    summary.update({
        "label": M.label,
        "n": M.ring.n,
        "variables": list(M.ring.variables),
        "prime": M.ring.p,
        "betti": {str(i): {str(j): beta for j, beta in row.items()} for i, row in sorted(table.entries.items())},
        "hilbert_numerator": {str(j): c for j, c in data.numerator.items()},
        "hilbert_polynomial": data.polynomial,
        "hilbert_coefficients": data.coefficients,
        "degree": data.degree,
        "hdeg": None if M.is_zero() else hdeg(M).value,
    })
    window = shape_window(M, _settings().window_low, _settings().window_high)
    if window is not None:
        summary["hilbert_function"] = {str(t): M.hilbert_function(t) for t in range(window[0], window[1] + 1)}
    return summary


def compute_invariants(
    presentation: Optional[str] = None, file_path: Optional[str] = None, reference: Optional[str] = None
) -> Dict[str, Any]:
    """
    reg, indeg, pd, depth, dim, degree, Betti table, Hilbert data and hdeg of a module.

    Args:
        presentation: Presentation text
        file_path: Presentation file (relative to the data directory or absolute)
        reference: Name of a reference module

    Returns:
        Dict containing the invariants
    """
    try:
        M = load_module(presentation, file_path, reference)
        return {"success": True, **summarize_module(M)}
    except (AlgebraError, ValueError, FileNotFoundError, KeyError) as e:
        return {"error": str(e), "file_path": file_path, "reference": reference}
    except Exception as e:
        logger.error(f"Unexpected error in compute_invariants: {e}")
        return {"error": f"Unexpected error: {str(e)}", "file_path": file_path, "reference": reference}


def describe_ext(ext: ExtModule, low_margin: int, high_margin: int) -> Dict[str, Any]:
    values = invariants(ext.presentation).model_dump(mode="json")
    result = {
        "index": ext.index,
        "against": ext.against,
        "is_zero": ext.is_zero(),
        "reg": values["reg"],
        "indeg": values["indeg"],
        "dim": ext.dim if not ext.is_zero() else 0,
        "presentation": emit_presentation(ext.presentation),
    }
    window = shape_window(ext.presentation, low_margin, high_margin)
    if window is not None:
        result["hilbert_function"] = {str(mu): ext.hilbert_function(mu) for mu in range(window[0], window[1] + 1)}
    return result


def compute_ext(
    i: int,
    presentation: Optional[str] = None,
    file_path: Optional[str] = None,
    against_presentation: Optional[str] = None,
    against_file: Optional[str] = None,
) -> Dict[str, Any]:
    """
    Ext^i(M, R), or Ext^i(M, N) when a second module is given.

    Args:
        i: Cohomological index
        presentation: Presentation text of M
        file_path: Presentation file of M
        against_presentation: Presentation text of N
        against_file: Presentation file of N

    Returns:
        Dict containing reg, indeg, dim, the Hilbert function near the
        regularity and a minimal presentation of the Ext module
    """
    try:
        M = load_module(presentation, file_path)
        if against_presentation or against_file:
            N = load_module(against_presentation, against_file)
            ext = ext_module(M, N, i)
        else:
            ext = ext_into_ring(M, i)
        config = _settings()
        return {"success": True, **describe_ext(ext, config.window_low, config.window_high)}
    except (AlgebraError, ValueError, FileNotFoundError) as e:
        return {"error": str(e), "index": i, "file_path": file_path, "against_file": against_file}
    except Exception as e:
        logger.error(f"Unexpected error in compute_ext: {e}")
        return {"error": f"Unexpected error: {str(e)}", "index": i, "file_path": file_path}


def homological_degree(
    presentation: Optional[str] = None, file_path: Optional[str] = None, seed: Optional[int] = None
) -> Dict[str, Any]:
    """
    hdeg(M) with the contribution of every deficiency module.

    Args:
        presentation: Presentation text
        file_path: Presentation file
        seed: Recorded with the result; the recursion itself is deterministic

    Returns:
        Dict containing hdeg, deg, dim and the breakdown
    """
    try:
        M = load_module(presentation, file_path)
        seed = _settings().seed if seed is None else seed
        if M.is_zero():
            return {"success": True, "seed": seed, "hdeg": 0, "degree": 0, "dim": 0, "terms": []}
        result = hdeg(M)
        return {"success": True, "seed": seed, "hdeg": result.value, **result.model_dump(mode="json", exclude={"value"})}
    except (AlgebraError, ValueError, FileNotFoundError) as e:
        return {"error": str(e), "file_path": file_path}
    except Exception as e:
        logger.error(f"Unexpected error in homological_degree: {e}")
        return {"error": f"Unexpected error: {str(e)}", "file_path": file_path}


def verify_presentation(
    presentation: Optional[str] = None,
    file_path: Optional[str] = None,
    seed: Optional[int] = None,
    window: Optional[Tuple[int, int]] = None,
) -> Dict[str, Any]:
    """
    Run every bound check on one module.

    Args:
        presentation: Presentation text
        file_path: Presentation file
        seed: Seed for random linear forms
        window: (low, high) margins around indeg and reg for Hilbert-function windows

    Returns:
        Dict containing the summary, pass/fail counts, the failing reports and
        the claim and consistency sections
    """
    try:
        M = load_module(presentation, file_path)
        low, high = window if window else (None, None)
        config = load_settings(seed=seed if seed is not None else _settings().seed,
                               window_low=low, window_high=high)
        summary, reports = analyze_instance(M, options_from_settings(config), M.label or "module")
        claims, checks = split_reports(reports)
        return {
            "success": True,
            "passed": not any(report.failed for report in reports),
            "summary": summary.model_dump(mode="json"),
            "failures": [report.model_dump(mode="json") for report in reports if report.failed],
            "reports": [report.model_dump(mode="json") for report in claims],
            "consistency": [report.model_dump(mode="json") for report in checks],
            "config": config.snapshot(),
        }
    except (AlgebraError, ValueError, FileNotFoundError) as e:
        return {"error": str(e), "file_path": file_path}
    except Exception as e:
        logger.error(f"Unexpected error in verify_presentation: {e}")
        return {"error": f"Unexpected error: {str(e)}", "file_path": file_path}


def generate_corpus_files(
    n: int,
    max_deg: int,
    count: int,
    out_dir: str,
    seed: Optional[int] = None,
    num_gens: int = 2,
    num_rels: int = 3,
) -> Dict[str, Any]:
    """
    Write a seeded corpus of presentation files.

    Args:
        n: Number of variables (2..4)
        max_deg: Largest relation degree (1..4)
        count: Number of modules
        out_dir: Output directory (relative to the data directory or absolute)
        seed: Seed; defaults to REGEXT_SEED
        num_gens: Generators of the random presentations
        num_rels: Relations of the random presentations

    Returns:
        Dict containing the written file names
    """
    try:
        seed = _settings().seed if seed is None else seed
        params = CorpusParams(
            n=n, max_deg=max_deg, count=count, num_gens=num_gens, num_rels=num_rels, prime=_settings().prime
        )
        directory = _resolve(out_dir)
        paths = save_corpus(generate_corpus(params, seed), directory)
        return {
            "success": True,
            "directory": str(directory),
            "seed": seed,
            "params": params.model_dump(),
            "total_files": len(paths),
            "files": [path.name for path in paths],
        }
    except ValueError as e:
        return {"error": str(e), "directory": out_dir, "files": []}
    except Exception as e:
        logger.error(f"Unexpected error in generate_corpus_files: {e}")
        return {"error": f"Unexpected error: {str(e)}", "directory": out_dir, "files": []}


def describe_reference_modules() -> Dict[str, Any]:
    """The named reference modules with their descriptions and known values."""
    modules = [
        {"name": name, "description": REFERENCE_MODULES[name]["description"], "values": REFERENCE_MODULES[name]["values"]}
        for name in list_reference_modules()
    ]
    return {"success": True, "total_modules": len(modules), "modules": modules}
