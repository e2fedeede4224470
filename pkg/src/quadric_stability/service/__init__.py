"""HTTP service layer: pydantic models, shared handlers, FastAPI app."""
