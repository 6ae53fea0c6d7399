"""
Configuration settings for the SRG toolkit
Operational settings can be overridden with environment variables; solver limits are fixed
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Logging and output
LOG_LEVEL = os.getenv("SRG_LOG_LEVEL", "INFO").upper()
OUTPUT_DIR = os.getenv("SRG_OUTPUT_DIR", ".")  # relative output paths resolve here

# Graph and field limits
MAX_VERTICES = 1024
MAX_FIELD_ORDER = 64
FIELD_AXIOM_SAMPLES = 2000  # sampled axiom checks for q > 16
EXHAUSTIVE_AXIOM_ORDER = 16

# Solver defaults (exposed only as --threads / --node-budget)
DEFAULT_THREADS = 1
DEFAULT_NODE_BUDGET = 10**9
ORACLE_MAX_VERTICES = 21

# Census
CENSUS_MAX_V = 40
CENSUS_DEFAULT_MAX_V = 30

# Reports and numeric checks
REPORT_SCHEMA_VERSION = 1
INTERLACING_TOLERANCE = 1e-7
TOOL_VERSION = "0.1.0"
