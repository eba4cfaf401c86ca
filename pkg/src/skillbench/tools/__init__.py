from .fabric import (
    FILLER_FACTOR,
    WORKSPACE_TOOLS,
    Registry,
    ToolSpec,
    UnknownFamily,
    Workspace,
    WorkspaceError,
    assemble_entry,
    build_registry,
    collect_entity,
    data_response,
    get_family,
    invoke,
    make_workspace,
    oracle,
    oracle_fields,
    resolve_args,
)
from .families import FAMILIES, FAMILY_SLUGS, Family

__all__ = [
    "FAMILIES", "FAMILY_SLUGS", "FILLER_FACTOR", "Family", "Registry", "ToolSpec", "UnknownFamily",
    "WORKSPACE_TOOLS", "Workspace", "WorkspaceError", "assemble_entry", "build_registry",
    "collect_entity", "data_response", "get_family", "invoke", "make_workspace", "oracle",
    "oracle_fields", "resolve_args",
]
