"""
Compare dimension tables from different constructions
"""
from typing import Dict, List, Optional


class DimensionComparator:
    """Compare and summarize per-degree dimension tables"""

    def __init__(self):
        self.name = "dimension_comparator"

    def compare_tables(self, tables: Dict[str, Dict[int, int]]) -> Dict:
        """
        Compare several dimension tables degree by degree

        Args:
            tables: construction name -> {degree: dim}

        Returns:
            Comparison dictionary with per-degree rows, "agree" and the first
            disagreeing degree (or None)
        """
        if not tables:
            return {"error": "No tables to compare", "agree": False}

        names = list(tables)
        degrees = sorted(set().union(*(t.keys() for t in tables.values())))

        rows = []
        first_mismatch: Optional[int] = None
        for k in degrees:
            values = {name: tables[name].get(k) for name in names}
            agree = len(set(values.values())) == 1
            if not agree and first_mismatch is None:
                first_mismatch = k
            rows.append({"degree": k, "dims": values, "agree": agree})

        comparison = {
            "tables": names,
            "degrees": degrees,
            "rows": rows,
            "agree": first_mismatch is None,
            "first_mismatch": first_mismatch,
            "totals": {name: sum(tables[name].get(k, 0) for k in degrees) for name in names},
        }
        comparison["notes"] = self._generate_notes(comparison)
        return comparison

    def _generate_notes(self, comparison: Dict) -> List[str]:
        notes = []
        if comparison["agree"]:
            notes.append(f"All {len(comparison['tables'])} tables agree on {len(comparison['degrees'])} degrees")
            return notes

        mismatched = [row["degree"] for row in comparison["rows"] if not row["agree"]]
        notes.append(f"Tables differ at degrees: {', '.join(str(k) for k in mismatched)}")
        missing = [row["degree"] for row in comparison["rows"] if None in row["dims"].values()]
        if missing:
            notes.append(f"Some tables do not cover degrees: {', '.join(str(k) for k in missing)}")
        return notes
