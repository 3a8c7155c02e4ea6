#!/usr/bin/env python3
"""Radius-versus-order table for the kite, H_n, cycles and the enumeration maximum.

Thin wrapper around ``dlspec plotdata`` that writes ``plotdata.csv`` by default.
"""
import sys

from dlspec.cli import main

if __name__ == "__main__":
    args = sys.argv[1:] or ["--n", "4..10", "--out", "plotdata.csv"]
    sys.exit(main(["plotdata", *args]))
