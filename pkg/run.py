#!/usr/bin/env python3
"""
Immaculate Hecke Toolkit - Main Entry Point

    python run.py enumerate --shape 2,2,3 --class set   # run one CLI command
    python run.py                                        # serve the JSON API
"""
import os
import sys
from app import create_app

app = create_app()

if __name__ == '__main__':
    if len(sys.argv) > 1:
        from app.cli import main
        sys.exit(main(sys.argv[1:]))

    port = int(os.getenv('PORT', 5000))
    debug = os.getenv('FLASK_ENV', 'development') == 'development'

    print("\n" + "=" * 60)
    print("  Immaculate Hecke Toolkit")
    print("=" * 60)
    print(f"\n  API Base URL:   http://localhost:{port}/api")
    print(f"  Health check:   http://localhost:{port}/api/health")
    print("\n" + "=" * 60 + "\n")

    app.run(host='0.0.0.0', port=port, debug=debug)
