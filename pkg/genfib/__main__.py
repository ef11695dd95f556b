"""Allow running as: python3 -m genfib"""
from genfib.cli import main

main()
