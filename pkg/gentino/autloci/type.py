import enum


class AutGroupLabel(enum.Enum):
    """
    Automorphism groups of genus 2 curves in characteristic zero, with their SmallGroups ids (order, index).
    """
    C2 = ("C2", 2, 1)
    C10 = ("C10", 10, 2)
    V4 = ("V4", 4, 2)
    D4 = ("D4", 8, 3)
    D6 = ("D6", 12, 4)
    C3_D4 = ("C3:D4", 24, 8)
    GL2_3 = ("GL(2,3)", 48, 29)

    @property
    def group_name(self) -> str:
        return self.value[0]

    @property
    def order(self) -> int:
        return self.value[1]

    @property
    def gap_id(self):
        return self.value[1], self.value[2]

    def to_json(self):
        return {"group": self.group_name, "gap_id": list(self.gap_id)}


__all__ = ['AutGroupLabel']
