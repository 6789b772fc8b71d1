"""Normal subgroups, characteristic subgroups and composition series."""
