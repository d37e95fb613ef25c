from fastapi import FastAPI

from lambdadl.api.routes import router as lambdadl_router

# ---- App ----
app = FastAPI(
    title="lambdadl",
    version="1.0",
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json",
)

app.include_router(lambdadl_router)


# ---- Health ----
@app.get("/health")
def health():
    return {"ok": True, "service": "lambdadl"}
