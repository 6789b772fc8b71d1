"""Named groups, products and the group-spec grammar."""
