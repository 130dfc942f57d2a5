#!/usr/bin/env python3
"""
regext MCP Server

An MCP server (stdio transport) exposing the regext engines: invariants and
Betti tables of graded modules, Ext modules, the homological degree, bound
verification and seeded corpus generation. Modules are passed as
presentation text or as files in the data directory.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from mcp.server.fastmcp import FastMCP

from regext.config import load_settings
from regext.data.corpus import PRESENTATION_SUFFIX
from regext.tools import module_tools
from regext.tools.module_tools import initialize_module_tools

# Load environment variables
load_dotenv()

settings = load_settings(log_level="INFO")

logging.basicConfig(level=settings.log_level)
logger = logging.getLogger(__name__)

# Initialize the MCP server
mcp = FastMCP("regext")

# Presentation files are resolved against this directory
DATA_DIR = Path(os.getenv("REGEXT_DATA_DIR", Path.cwd() / "data"))

initialize_module_tools(DATA_DIR, settings)


@mcp.tool()
def list_files() -> Dict[str, Any]:
    """
    List the presentation files in the data directory.

    Returns:
        Dict containing file names and sizes
    """
    try:
        if not DATA_DIR.exists():
            return {
                "error": "Data directory does not exist",
                "directory": str(DATA_DIR),
                "files": []
            }

        files = [
            {"name": path.name, "size": path.stat().st_size}
            for path in sorted(DATA_DIR.glob(f"*{PRESENTATION_SUFFIX}"))
        ]
        return {
            "directory": str(DATA_DIR),
            "total_files": len(files),
            "files": files
        }

    except Exception as e:
        return {
            "error": f"Failed to list files: {str(e)}",
            "directory": str(DATA_DIR),
            "files": []
        }


@mcp.tool()
def compute_invariants(
    presentation: Optional[str] = None,
    file_path: Optional[str] = None,
    reference: Optional[str] = None
) -> Dict[str, Any]:
    """
    Compute reg, indeg, pd, depth, dim, degree, Betti table, Hilbert data and hdeg.

    Args:
        presentation: Presentation text (RING/GENS/REL lines)
        file_path: Presentation file, relative to the data directory or absolute
        reference: Name of a reference module (see list_reference_modules)

    Returns:
        Dict containing the invariants
    """
    return module_tools.compute_invariants(presentation, file_path, reference)


@mcp.tool()
def compute_ext(
    i: int,
    presentation: Optional[str] = None,
    file_path: Optional[str] = None,
    against_presentation: Optional[str] = None,
    against_file: Optional[str] = None
) -> Dict[str, Any]:
    """
    Compute Ext^i(M, R), or Ext^i(M, N) when a second module is given.

    Args:
        i: Cohomological index
        presentation: Presentation text of M
        file_path: Presentation file of M
        against_presentation: Presentation text of N
        against_file: Presentation file of N

    Returns:
        Dict containing reg, indeg, dim, Hilbert function and presentation of the Ext module
    """
    return module_tools.compute_ext(i, presentation, file_path, against_presentation, against_file)


@mcp.tool()
def homological_degree(
    presentation: Optional[str] = None,
    file_path: Optional[str] = None,
    seed: Optional[int] = None
) -> Dict[str, Any]:
    """
    Compute hdeg(M) with the contribution of every deficiency module.

    Args:
        presentation: Presentation text
        file_path: Presentation file
        seed: Seed recorded with the result

    Returns:
        Dict containing hdeg, deg, dim and the breakdown
    """
    return module_tools.homological_degree(presentation, file_path, seed)


@mcp.tool()
def verify_presentation(
    presentation: Optional[str] = None,
    file_path: Optional[str] = None,
    seed: Optional[int] = None,
    window_low: Optional[int] = None,
    window_high: Optional[int] = None
) -> Dict[str, Any]:
    """
    Check every regularity, dimension and degree bound on one module.

    Args:
        presentation: Presentation text
        file_path: Presentation file
        seed: Seed for random linear forms
        window_low: Margin below indeg for Hilbert-function windows
        window_high: Margin above reg for Hilbert-function windows

    Returns:
        Dict containing pass/fail, the summary and every report
    """
    window = None
    if window_low is not None or window_high is not None:
        window = (
            settings.window_low if window_low is None else window_low,
            settings.window_high if window_high is None else window_high,
        )
    return module_tools.verify_presentation(presentation, file_path, seed, window)


@mcp.tool()
def generate_corpus_files(
    n: int,
    max_deg: int,
    count: int,
    out_dir: str,
    seed: Optional[int] = None
) -> Dict[str, Any]:
    """
    Write a seeded corpus of random presentations with forced strata.

    Args:
        n: Number of variables (2..4)
        max_deg: Largest relation degree (1..4)
        count: Number of modules
        out_dir: Output directory, relative to the data directory or absolute
        seed: Seed; defaults to REGEXT_SEED

    Returns:
        Dict containing the written file names
    """
    return module_tools.generate_corpus_files(n, max_deg, count, out_dir, seed)


@mcp.tool()
def list_reference_modules() -> Dict[str, Any]:
    """
    List the named reference modules with their known invariants.

    Returns:
        Dict containing names, descriptions and values
    """
    return module_tools.describe_reference_modules()


def main():
    """Main entry point for the MCP server."""
    logger.info("Starting regext MCP server...")
    logger.info(f"Data directory: {DATA_DIR}")
    logger.info(f"Settings: {settings.snapshot()}")
    mcp.run()


if __name__ == "__main__":
    main()
