# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""bicyclic-szeged module entrypoint."""

import sys

from . import cli

sys.exit(cli.main())
