"""Support for ``python -m foliamod``."""

from foliamod.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
