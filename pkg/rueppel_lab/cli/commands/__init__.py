"""
One module per subcommand. Each registers its parser and a handler that
calls into the services and returns an output record.
"""
from rueppel_lab.cli.commands import (catalog,
                                      cfrac,
                                      compare,
                                      expand,
                                      hankel,
                                      riordan,
                                      verify)

COMMANDS = (expand, hankel, cfrac, riordan, catalog, verify, compare)
