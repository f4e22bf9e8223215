"""
Модуль с эндпоинтами API.
"""
import logging
from typing import Callable, List, TypeVar

from fastapi import APIRouter, Depends, HTTPException, Path, Query, status

from stylic import models
from stylic.algebra import export_idempotents
from stylic.cartan import compare
from stylic.config import Settings, get_settings
from stylic.errors import StylicError
from stylic.monoid import get_monoid
from stylic.quiver import build_extended, build_quiver

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/api/v1",
    tags=["stylic"],
)

T = TypeVar("T")


def alphabet_size(
    n: int = Path(..., ge=1, description="Размер алфавита"),
    settings: Settings = Depends(get_settings),
) -> int:
    """Ограничивает n значением STYLIC_API_MAX_N."""
    if n > settings.STYLIC_API_MAX_N:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"n = {n} больше допустимого STYLIC_API_MAX_N = {settings.STYLIC_API_MAX_N}",
        )
    return n


def _run(action: Callable[[], T]) -> T:
    try:
        return action()
    except StylicError as e:
        logger.error(f"Ошибка вычисления: {e}")
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=str(e),
        )
    except Exception as e:
        logger.exception("Внутренняя ошибка сервера")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Внутренняя ошибка сервера: {e}",
        )


@router.get("/monoid/{n}", response_model=models.MonoidExport)
def get_monoid_export(n: int = Depends(alphabet_size)):
    """
    Элементы Styl(A) с представляющими словами и таблицами действия.
    """
    return _run(lambda: get_monoid(n).to_export())


@router.get("/idempotents/{n}", response_model=List[models.IdempotentExport])
def get_idempotents(n: int = Depends(alphabet_size)):
    """
    Идемпотенты e_γ для всех столбцов в порядке битовых масок.
    """
    return _run(lambda: export_idempotents(get_monoid(n)))


@router.get("/quiver/{n}", response_model=models.QuiverExport)
def get_quiver(
    n: int = Depends(alphabet_size),
    extended: bool = Query(False, description="Включить петли Q'(A)"),
):
    """
    Колчан Q(A) или расширенный колчан Q'(A).
    """
    build = build_extended if extended else build_quiver
    return _run(lambda: build(n).to_export())


@router.get("/cartan/{n}", response_model=models.CartanComparison)
def get_cartan(n: int = Depends(alphabet_size)):
    """
    Матрица Картана, вычисленная двумя способами, и признак их совпадения.
    """
    return _run(lambda: compare(get_monoid(n)))
